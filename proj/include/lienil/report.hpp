#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lienil/algebra_oracle.hpp"
#include "lienil/classification.hpp"

namespace lienil {

enum class OracleMode { Auto, Force, Off };

struct AnalyzeOptions {
  OracleMode oracle = OracleMode::Auto;
  OracleOptions oracle_options;
  bool timing = false;  // adds wall-clock fields; makes output nondeterministic
};

enum class Outcome { Pass, Fail, Skip };
std::string_view to_string(Outcome o);

struct Check {
  std::string name;
  Outcome outcome = Outcome::Skip;
  std::string detail;
};

struct OracleResult {
  std::uint64_t t_upper = 0;
  std::uint64_t t_lower = 0;
  std::vector<std::size_t> upper_dims;
  std::vector<std::size_t> lower_dims;
  std::vector<std::size_t> dimension_subgroup_orders;  // D(m) from the definition, m = 1..t^L
  std::optional<std::string> failure;                  // NoConvergence message for non Lie nilpotent input
};

struct GammaTerm {
  std::size_t order;
  std::optional<AbelianType> type;
};

struct LieReport {
  std::string group;
  std::size_t order = 0;
  unsigned prime = 0;
  bool lie_nilpotent = false;
  std::optional<std::size_t> nilpotency_class;
  std::vector<GammaTerm> gamma_series;
  std::vector<std::size_t> dimension_recursive;
  std::vector<std::size_t> dimension_product;
  DVector d;
  std::optional<std::uint64_t> t_upper_jennings;
  std::optional<OracleResult> oracle;
  Verdict verdict;
  std::optional<AlmostMaximalCase> lemma2;
  std::vector<Check> checks;
  std::optional<double> seconds;

  bool consistent() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

LieReport analyze(const FiniteGroup& g, const std::string& name, Prime p, const AnalyzeOptions& options = {});

}  // namespace lienil
