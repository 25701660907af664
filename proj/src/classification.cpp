#include "lienil/classification.hpp"

#include <map>
#include <sstream>

namespace lienil {

std::string_view to_string(AlmostMaximalCase c) {
  switch (c) {
    case AlmostMaximalCase::I: return "i";
    case AlmostMaximalCase::II: return "ii";
    case AlmostMaximalCase::III: return "iii";
    case AlmostMaximalCase::IV: return "iv";
  }
  return "?";
}

std::string Verdict::tag() const {
  switch (status) {
    case Status::NotLieNilpotent: return "not_lie_nilpotent";
    case Status::Abelian: return "abelian";
    case Status::Maximal: return "maximal";
    case Status::Below: return "below";
    case Status::AlmostMaximal:
      return "almost_maximal." +
             (almost_maximal_case ? std::string(to_string(*almost_maximal_case)) : std::string("unmatched"));
  }
  return "unknown";
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

StructuralEvidence structural_evidence(const FiniteGroup& g) {
  const auto gamma = lower_central_series(g);
  if (!gamma.back().is_trivial()) throw Error(ErrorKind::NotLieNilpotent, "group is not nilpotent");
  StructuralEvidence e;
  e.nilpotency_class = gamma.size() - 1;
  const auto trivial = Subgroup::trivial(g);
  const auto& g2 = gamma.size() > 1 ? gamma[1] : trivial;
  const auto& g3 = gamma.size() > 2 ? gamma[2] : trivial;
  e.gamma2_order = g2.order();
  e.gamma3_order = g3.order();
  if (is_abelian(g2)) e.gamma2 = abelian_invariants(g2);
  if (is_abelian(g3)) e.gamma3 = abelian_invariants(g3);
  return e;
}

std::optional<AlmostMaximalCase> structural_case_from(const StructuralEvidence& e, unsigned p) {
  const AbelianType c2x2{{2, 2}}, c4x2{{4, 2}}, c2x2x2{{2, 2, 2}}, c3x3{{3, 3}};
  const auto is = [](const std::optional<AbelianType>& t, const AbelianType& want) { return t && *t == want; };
  if (p == 2 && e.nilpotency_class == 2 && is(e.gamma2, c2x2)) return AlmostMaximalCase::I;
  if (p == 2 && e.nilpotency_class == 4 && is(e.gamma2, c4x2) && is(e.gamma3, c2x2)) return AlmostMaximalCase::II;
  if (p == 2 && e.nilpotency_class == 4 && is(e.gamma2, c2x2x2)) return AlmostMaximalCase::III;
  if (p == 3 && e.nilpotency_class == 3 && is(e.gamma2, c3x3)) return AlmostMaximalCase::IV;
  return std::nullopt;
}

std::optional<AlmostMaximalCase> theorem1_structural_case(const FiniteGroup& g, Prime p) {
  if (!is_lie_nilpotent(g, p)) throw Error(ErrorKind::NotLieNilpotent, "criterion fails for this prime");
  return structural_case_from(structural_evidence(g), p);
}

std::optional<AlmostMaximalCase> lemma2_profile(const DVector& d) {
  const unsigned p = d.prime, n = d.n;
  if (p != 2 && p != 3) return std::nullopt;
  if (n < 2) return std::nullopt;
  std::map<std::size_t, unsigned> required;
  if (p == 2 && n == 2) {
    required[2] = 2;
  } else {
    // Positions p^i + 1 for 0 <= i <= n-2 together with p^{n-1}; for n = 2
    // and p = 3 this is {2, 3}.
    for (unsigned i = 0; i + 2 <= n; ++i) required[ipow(p, i) + 1] += 1;
    required[ipow(p, n - 1)] += 1;
  }
  if (d.entries != required) return std::nullopt;
  if (p == 2) return n == 2 ? AlmostMaximalCase::I : AlmostMaximalCase::II;
  return n == 2 ? AlmostMaximalCase::III : AlmostMaximalCase::IV;
}

Status bucket(std::uint64_t t_upper, unsigned n, unsigned p) {
  if (n == 0) return Status::Abelian;
  const auto pn = ipow(p, n);
  if (t_upper == pn + 1) return Status::Maximal;
  if (t_upper == pn - p + 2) return Status::AlmostMaximal;
  if (t_upper < pn - p + 2) return Status::Below;
  std::ostringstream os;
  os << "t^L = " << t_upper << " lies outside the admissible range for |G'| = " << pn;
  throw Error(ErrorKind::Internal, os.str());
}

Verdict classify(const FiniteGroup& g, Prime p, const ClassifyOptions& options) {
  Verdict v;
  v.p = p;
  if (!is_lie_nilpotent(g, p)) return v;
  const auto d = d_vector(series_recursive(g, p));
  v.n = d.n;
  v.t_upper = upper_index_jennings(d);
  v.status = bucket(v.t_upper, v.n, p);
  if (options.with_evidence) {
    v.evidence = structural_evidence(g);
    if (v.status == Status::AlmostMaximal) v.almost_maximal_case = structural_case_from(*v.evidence, p);
  }
  return v;
}

ConsistencyReport cross_validate(const FiniteGroup& g, Prime p) {
  if (!is_lie_nilpotent(g, p)) throw Error(ErrorKind::NotLieNilpotent, "criterion fails for this prime");
  ConsistencyReport r;
  const auto d = d_vector(series_recursive(g, p));
  const auto t = upper_index_jennings(d);
  const auto s = theorem1_structural_case(g, p);
  const auto prof = lemma2_profile(d);
  r.structural = s.has_value();
  r.profile = prof.has_value();
  r.index = d.n >= 1 && t == ipow(p, d.n) - p + 2;
  std::ostringstream os;
  os << "structural=" << (s ? to_string(*s) : "none") << " profile=" << (prof ? to_string(*prof) : "none")
     << " t^L=" << t << " p^n-p+2=" << (d.n >= 1 ? ipow(p, d.n) - p + 2 : 0);
  r.detail = os.str();
  return r;
}

SharpnessWitness corollary_sharpness(unsigned p, const std::vector<NamedGroup>& catalog) {
  if (p != 2 && p != 3) throw Error(ErrorKind::InvalidArgument, "sharpness is stated for p = 2 and p = 3");
  for (const auto& entry : catalog) {
    if (!is_lie_nilpotent(*entry.group, p)) continue;
    const auto d = d_vector(series_recursive(*entry.group, Prime(p)));
    if (d.n < 2) continue;
    const auto t = upper_index_jennings(d);
    const auto target = p == 2 ? ipow(2, d.n) : ipow(3, d.n) - 1;
    if (t == target) return {entry.name, p, d.n, t, ipow(p, d.n - 1) + 2 * p - 1};
  }
  throw Error(ErrorKind::NoWitnessFound, "no group attains the bound for p = " + std::to_string(p));
}

}  // namespace lienil
