#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lienil/lie_dimension.hpp"

namespace lienil {

// Cases of the almost-maximal classification, shared by the structural test
// and the d-vector profile.
enum class AlmostMaximalCase { I, II, III, IV };

std::string_view to_string(AlmostMaximalCase c);

enum class Status { NotLieNilpotent, Abelian, Maximal, AlmostMaximal, Below };

struct StructuralEvidence {
  std::size_t nilpotency_class = 0;
  std::optional<AbelianType> gamma2;  // absent when gamma_2 is nonabelian
  std::optional<AbelianType> gamma3;
  std::size_t gamma2_order = 1;
  std::size_t gamma3_order = 1;
};

struct Verdict {
  Status status = Status::NotLieNilpotent;
  std::optional<AlmostMaximalCase> almost_maximal_case;  // structural case when status is AlmostMaximal
  std::uint64_t t_upper = 0;
  unsigned n = 0;
  unsigned p = 0;
  std::optional<StructuralEvidence> evidence;

  // "maximal", "almost_maximal.iii", "almost_maximal.unmatched", ...
  std::string tag() const;
};

StructuralEvidence structural_evidence(const FiniteGroup& g);

// First matching structural case (i)-(iv). Throws NotLieNilpotent.
std::optional<AlmostMaximalCase> theorem1_structural_case(const FiniteGroup& g, Prime p);
std::optional<AlmostMaximalCase> structural_case_from(const StructuralEvidence& e, unsigned p);

// Matches the d-vector against the almost-maximal profiles.
std::optional<AlmostMaximalCase> lemma2_profile(const DVector& d);

// Bucket from (t^L, n, p) alone.
Status bucket(std::uint64_t t_upper, unsigned n, unsigned p);

struct ClassifyOptions {
  bool with_evidence = true;
};

Verdict classify(const FiniteGroup& g, Prime p, const ClassifyOptions& options = {});

struct ConsistencyReport {
  bool structural = false;
  bool profile = false;
  bool index = false;  // t^L = p^n - p + 2
  bool agree() const { return structural == profile && profile == index; }
  std::string detail;
};

ConsistencyReport cross_validate(const FiniteGroup& g, Prime p);

struct SharpnessWitness {
  std::string name;
  unsigned p = 0;
  unsigned n = 0;
  std::uint64_t t_upper = 0;
  std::uint64_t shalev_bound = 0;  // p^{n-1} + 2p - 1
};

struct NamedGroup {
  std::string name;
  const FiniteGroup* group;
};

// Finds a group in the list whose t^L equals 2^n (p = 2) or 3^n - 1 (p = 3).
// Throws NoWitnessFound.
SharpnessWitness corollary_sharpness(unsigned p, const std::vector<NamedGroup>& catalog);

}  // namespace lienil
