#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "lienil/report.hpp"

namespace lienil {

struct AcceptanceOptions {
  std::filesystem::path catalog;
  OracleOptions oracle;
  Limits limits;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  Outcome outcome = Outcome::Skip;
  std::string detail;
  double seconds = 0;
};

// Runs every acceptance criterion; `log` receives one line per criterion as
// it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream* log = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

std::string format_result(const CriterionResult& r);

}  // namespace lienil
