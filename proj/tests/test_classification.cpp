#include "doctest.h"
#include "lienil/classification.hpp"
#include "lienil/constructions.hpp"
#include "lienil/report.hpp"

using namespace lienil;

namespace {

DVector dv(unsigned p, unsigned n, std::map<std::size_t, unsigned> e) {
  DVector d;
  d.prime = p;
  d.n = n;
  d.entries = std::move(e);
  return d;
}

StructuralEvidence evidence(std::size_t cls, std::optional<AbelianType> g2, std::optional<AbelianType> g3) {
  StructuralEvidence e;
  e.nilpotency_class = cls;
  e.gamma2 = std::move(g2);
  e.gamma3 = std::move(g3);
  return e;
}

}  // namespace

TEST_CASE("bucketing by index") {
  CHECK(bucket(2, 0, 2) == Status::Abelian);
  CHECK(bucket(9, 3, 2) == Status::Maximal);
  CHECK(bucket(8, 3, 2) == Status::AlmostMaximal);
  CHECK(bucket(7, 3, 2) == Status::Below);
  CHECK(bucket(28, 3, 3) == Status::Maximal);
  CHECK(bucket(26, 3, 3) == Status::AlmostMaximal);
  CHECK(bucket(25, 3, 3) == Status::Below);
  CHECK(bucket(22, 2, 5) == Status::AlmostMaximal);
  CHECK(bucket(21, 2, 5) == Status::Below);
  CHECK_THROWS_AS(bucket(24, 2, 5), Error);
  CHECK_THROWS_AS(bucket(27, 3, 3), Error);
}

TEST_CASE("structural cases") {
  const AbelianType c2x2{{2, 2}}, c4x2{{4, 2}}, c2x2x2{{2, 2, 2}}, c3x3{{3, 3}}, c4{{4}};
  CHECK(structural_case_from(evidence(2, c2x2, AbelianType{}), 2) == AlmostMaximalCase::I);
  CHECK(structural_case_from(evidence(4, c4x2, c2x2), 2) == AlmostMaximalCase::II);
  CHECK(structural_case_from(evidence(4, c2x2x2, c2x2), 2) == AlmostMaximalCase::III);
  CHECK(structural_case_from(evidence(3, c3x3, AbelianType{{3}}), 3) == AlmostMaximalCase::IV);
  CHECK_FALSE(structural_case_from(evidence(2, c4, AbelianType{}), 2).has_value());
  CHECK_FALSE(structural_case_from(evidence(3, c2x2x2, c2x2), 2).has_value());
  CHECK_FALSE(structural_case_from(evidence(3, c3x3, AbelianType{{3}}), 2).has_value());
  CHECK_FALSE(structural_case_from(evidence(4, std::nullopt, c2x2), 2).has_value());
}

TEST_CASE("d-vector profiles") {
  CHECK(lemma2_profile(dv(2, 2, {{2, 2}})) == AlmostMaximalCase::I);
  CHECK(lemma2_profile(dv(2, 3, {{2, 1}, {3, 1}, {4, 1}})) == AlmostMaximalCase::II);
  CHECK(lemma2_profile(dv(2, 4, {{2, 1}, {3, 1}, {5, 1}, {8, 1}})) == AlmostMaximalCase::II);
  CHECK(lemma2_profile(dv(3, 2, {{2, 1}, {3, 1}})) == AlmostMaximalCase::III);
  CHECK(lemma2_profile(dv(3, 3, {{2, 1}, {4, 1}, {9, 1}})) == AlmostMaximalCase::IV);
  CHECK_FALSE(lemma2_profile(dv(2, 2, {{2, 1}, {3, 1}})).has_value());
  CHECK_FALSE(lemma2_profile(dv(5, 2, {{2, 1}, {3, 1}})).has_value());
  CHECK_FALSE(lemma2_profile(dv(2, 1, {{2, 1}})).has_value());

  // Profiles reproduce the almost-maximal index.
  for (const auto& d : {dv(2, 3, {{2, 1}, {3, 1}, {4, 1}}), dv(2, 4, {{2, 1}, {3, 1}, {5, 1}, {8, 1}}),
                        dv(3, 3, {{2, 1}, {4, 1}, {9, 1}})}) {
    std::uint64_t pn = 1;
    for (unsigned i = 0; i < d.n; ++i) pn *= d.prime;
    CHECK(upper_index_jennings(d) == pn - d.prime + 2);
  }
}

TEST_CASE("classification of constructed groups") {
  const auto d8 = dihedral_group(8);
  CHECK(classify(d8, Prime(2)).status == Status::Maximal);
  CHECK(classify(d8, Prime(3)).status == Status::NotLieNilpotent);
  CHECK(classify(cyclic_group(8), Prime(2)).status == Status::Abelian);
  CHECK(classify(cyclic_group(8), Prime(2)).t_upper == 2);

  const auto w2 = wreath_cyclic(2, 4);
  const auto v = classify(w2, Prime(2));
  CHECK(v.status == Status::AlmostMaximal);
  CHECK(v.almost_maximal_case == AlmostMaximalCase::III);
  CHECK(v.tag() == "almost_maximal.iii");
  CHECK(v.t_upper == 8);
  CHECK(v.n == 3);

  const auto w3 = classify(wreath_cyclic(3, 3), Prime(3));
  CHECK(w3.status == Status::AlmostMaximal);
  CHECK(w3.almost_maximal_case == AlmostMaximalCase::IV);

  const auto dd = classify(direct_product(d8, d8), Prime(2));
  CHECK(dd.almost_maximal_case == AlmostMaximalCase::I);

  CHECK(classify(wreath_cyclic(2, 8), Prime(2)).status == Status::Below);
  CHECK(classify(extraspecial_group(5), Prime(5)).status == Status::Maximal);
}

TEST_CASE("three-way agreement") {
  const auto d8 = dihedral_group(8);
  for (const auto& g : {d8, quaternion_group(), dihedral_group(16), direct_product(d8, d8), wreath_cyclic(2, 4)}) {
    const auto r = cross_validate(g, Prime(2));
    CHECK_MESSAGE(r.agree(), r.detail);
  }
  for (const auto& g : {extraspecial_group(3), wreath_cyclic(3, 3)}) CHECK(cross_validate(g, Prime(3)).agree());
  CHECK(cross_validate(wreath_cyclic(2, 4), Prime(2)).structural);
  CHECK_THROWS_AS(cross_validate(dihedral_group(6), Prime(2)), Error);
}

TEST_CASE("sharpness witnesses") {
  const auto w2 = wreath_cyclic(2, 4);
  const auto w3 = wreath_cyclic(3, 3);
  const auto d16 = dihedral_group(16);
  const std::vector<NamedGroup> catalog{{"D16", &d16}, {"C2wrC4", &w2}, {"C3wrC3", &w3}};

  const auto a = corollary_sharpness(2, catalog);
  CHECK(a.name == "C2wrC4");
  CHECK(a.n == 3);
  CHECK(a.t_upper == 8);

  const auto b = corollary_sharpness(3, catalog);
  CHECK(b.name == "C3wrC3");
  CHECK(b.t_upper == 8);
  CHECK(b.shalev_bound == 8);

  CHECK_THROWS_AS(corollary_sharpness(2, {}), Error);
  CHECK_THROWS_AS(corollary_sharpness(5, catalog), Error);
}

TEST_CASE("reports") {
  const auto g = wreath_cyclic(2, 4);
  const auto r = analyze(g, "C2wrC4", Prime(2));
  CHECK(r.consistent());
  REQUIRE(r.oracle.has_value());
  CHECK(r.oracle->t_upper == 8);
  const auto j = r.to_json();
  CHECK(j["verdict"] == "almost_maximal.iii");
  CHECK(j["t_upper_jennings"] == 8);
  CHECK_FALSE(j.contains("seconds"));
  CHECK(j.dump() == analyze(g, "C2wrC4", Prime(2)).to_json().dump());

  AnalyzeOptions off;
  off.oracle = OracleMode::Off;
  const auto r2 = analyze(g, "C2wrC4", Prime(2), off);
  CHECK_FALSE(r2.oracle.has_value());
  CHECK(r2.to_json()["oracle"].is_null());

  const auto s3 = analyze(dihedral_group(6), "S3", Prime(3));
  CHECK_FALSE(s3.lie_nilpotent);
  CHECK(s3.consistent());
  REQUIRE(s3.oracle.has_value());
  CHECK(s3.oracle->failure.has_value());
}
