#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "lienil/constructions.hpp"
#include "lienil/subgroup.hpp"

using namespace lienil;

namespace {

std::vector<std::vector<Elem>> table_of(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> t(g.order(), std::vector<Elem>(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) t[a][b] = g.multiply(a, b);
  return t;
}

// Same group with elements renamed by a random permutation fixing nothing in particular.
std::vector<std::vector<Elem>> relabel(const FiniteGroup& g, std::mt19937& rng) {
  std::vector<Elem> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<Elem>> t(g.order(), std::vector<Elem>(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) t[perm[a]][perm[b]] = perm[g.multiply(a, b)];
  return t;
}

std::vector<std::size_t> lcs_orders(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& s : lower_central_series(g)) out.push_back(s.order());
  return out;
}

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("small constructions satisfy the group axioms") {
  for (const auto& g : {cyclic_group(1), cyclic_group(12), dihedral_group(8), dihedral_group(16), quaternion_group(),
                        extraspecial_group(3), extraspecial_group(5), wreath_cyclic(2, 3), wreath_cyclic(3, 3)}) {
    CHECK(verify_group_axioms(g));
    CHECK(g.multiply(kIdentity, g.order() - 1) == g.order() - 1);
  }
}

TEST_CASE("orders of standard constructions") {
  CHECK(dihedral_group(8).order() == 8);
  CHECK(quaternion_group().order() == 8);
  CHECK(extraspecial_group(3).order() == 27);
  CHECK(wreath_cyclic(2, 4).order() == 64);
  CHECK(wreath_cyclic(3, 3).order() == 81);
  CHECK(direct_product(dihedral_group(8), quaternion_group()).order() == 64);
}

TEST_CASE("D8 from permutations") {
  // rotation and reflection of a square
  const auto g = FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  CHECK(g.order() == 8);
  CHECK(lcs_orders(g) == std::vector<std::size_t>{8, 2, 1});
  CHECK(center(g).order() == 2);
  CHECK(nilpotency_class(g) == 2);
  CHECK(abelian_invariants(lower_central_series(g)[1]) == AbelianType{{2}});
}

TEST_CASE("permutations compose left to right") {
  const auto g = FiniteGroup::from_permutations(3, {{1, 0, 2}, {0, 2, 1}});
  REQUIRE(g.order() == 6);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) {
      const auto pa = g.as_permutation(a), pb = g.as_permutation(b), pab = g.as_permutation(g.multiply(a, b));
      for (std::size_t x = 0; x < 3; ++x) CHECK(pab[x] == pb[pa[x]]);
    }
}

TEST_CASE("S5 exceeds a cap of 100") {
  Limits limits;
  limits.order_cap = 100;
  CHECK(kind_of([&] { FiniteGroup::from_permutations(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, limits); }) ==
        ErrorKind::CapExceeded);
  CHECK(FiniteGroup::from_permutations(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}).order() == 120);
}

TEST_CASE("table validation") {
  CHECK(kind_of([] { FiniteGroup::from_table({{0, 0}, {0, 0}}); }) == ErrorKind::NoIdentity);
  CHECK(kind_of([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); }) == ErrorKind::NoInverse);
  // Smallest non-associative loop.
  const std::vector<std::vector<Elem>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(kind_of([&] { FiniteGroup::from_table(loop); }) == ErrorKind::NotAssociative);
  CHECK(kind_of([] { FiniteGroup::from_table({{0, 1}, {1}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("identity is moved to index 0") {
  // C2 with the identity stored second
  const auto g = FiniteGroup::from_table({{1, 0}, {0, 1}});
  CHECK(g.multiply(0, 1) == 1);
  CHECK(g.multiply(1, 1) == 0);
}

TEST_CASE("commutator subgroup agrees with the all-pairs computation") {
  for (const auto& g : {dihedral_group(16), quaternion_group(), wreath_cyclic(2, 3), wreath_cyclic(3, 3),
                        FiniteGroup::from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}})}) {
    const auto whole = Subgroup::whole(g);
    auto h = commutator_subgroup(whole, g);
    CHECK(h == commutator_subgroup_bruteforce(whole, g));
    const auto h3 = commutator_subgroup(h, g);
    CHECK(h3 == commutator_subgroup_bruteforce(h, g));
  }
}

TEST_CASE("lower central series of known groups") {
  CHECK(lcs_orders(dihedral_group(16)) == std::vector<std::size_t>{16, 4, 2, 1});
  CHECK(lcs_orders(extraspecial_group(3)) == std::vector<std::size_t>{27, 3, 1});
  CHECK(lcs_orders(wreath_cyclic(2, 4)) == std::vector<std::size_t>{64, 8, 4, 2, 1});
  CHECK(lcs_orders(wreath_cyclic(3, 3)) == std::vector<std::size_t>{81, 9, 3, 1});
  const auto a4 = FiniteGroup::from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
  CHECK_FALSE(is_nilpotent(a4));
  CHECK(kind_of([&] { nilpotency_class(a4); }) == ErrorKind::NotNilpotent);
}

TEST_CASE("abelian invariants and exponents") {
  const auto g = direct_product(cyclic_group(4), cyclic_group(2));
  const auto whole = Subgroup::whole(g);
  CHECK(abelian_invariants(whole) == AbelianType{{4, 2}});
  CHECK(exponent(whole) == 4);
  CHECK(power_subgroup(whole, 2).order() == 2);
  const auto c6 = Subgroup::whole(cyclic_group(6));
  CHECK(abelian_invariants(c6) == AbelianType{{3, 2}});
  CHECK(kind_of([] { abelian_invariants(Subgroup::whole(quaternion_group())); }) == ErrorKind::NotAbelian);
  CHECK(AbelianType{{2, 2, 2}}.is_elementary(2));
  CHECK_FALSE(AbelianType{{4, 2}}.is_elementary(2));
  CHECK(log_p(81, 3) == 4u);
  CHECK(log_p(1, 5) == 0u);
  CHECK_FALSE(log_p(12, 2).has_value());
}

TEST_CASE("quotient by the centre and projection of the series") {
  const auto g = dihedral_group(16);
  const auto z = center(g);
  REQUIRE(z.order() == 2);
  const auto q = quotient(g, z);
  CHECK(q.group.order() == 8);
  CHECK(verify_group_axioms(q.group));
  const auto gamma = lower_central_series(g);
  const auto gamma_q = lower_central_series(q.group);
  for (std::size_t i = 0; i < gamma_q.size(); ++i) CHECK(q.image(gamma[i]) == gamma_q[i]);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      CHECK(q.projection[g.multiply(a, b)] == q.group.multiply(q.projection[a], q.projection[b]));
}

TEST_CASE("quotient by a non-normal subgroup") {
  const auto g = dihedral_group(8);
  Elem reflection = 0;
  for (Elem x = 1; x < g.order(); ++x)
    if (element_order(g, x) == 2 && !center(g).contains(x)) {
      reflection = x;
      break;
    }
  const std::vector<Elem> gens{reflection};
  const auto h = Subgroup::generated(g, gens);
  CHECK_FALSE(is_normal(h));
  CHECK(kind_of([&] { quotient(g, h); }) == ErrorKind::NotNormal);
}

TEST_CASE("relabeling preserves structure") {
  std::mt19937 rng(11);
  for (const auto& g : {dihedral_group(16), wreath_cyclic(2, 3), extraspecial_group(3)}) {
    const auto h = FiniteGroup::from_table(relabel(g, rng));
    CHECK(lcs_orders(h) == lcs_orders(g));
    CHECK(center(h).order() == center(g).order());
    CHECK(abelian_invariants(lower_central_series(h).back()) == abelian_invariants(lower_central_series(g).back()));
  }
}

TEST_CASE("semidirect products check their action") {
  const auto c4 = cyclic_group(4);
  const auto c2 = cyclic_group(2);
  Automorphism inv(4);
  for (Elem x = 0; x < 4; ++x) inv[x] = c4.inverse(x);
  const auto d8 = semidirect_product(c4, c2, extend_action(c4, c2, {{1, inv}}));
  CHECK(d8.order() == 8);
  CHECK(lcs_orders(d8) == std::vector<std::size_t>{8, 2, 1});

  Automorphism bad{0, 2, 1, 3};  // not a homomorphism of C4
  CHECK(kind_of([&] { semidirect_product(c4, c2, {{0, 1, 2, 3}, bad}); }) == ErrorKind::NotAutomorphism);
  Automorphism c3_swap{0, 2, 1};
  const auto c3 = cyclic_group(3);
  // x -> x^-1 cannot be attached to a generator of order 3
  CHECK(kind_of([&] { extend_action(c3, c3, {{1, c3_swap}}); }) == ErrorKind::NotHomomorphism);
}

TEST_CASE("large groups use permutation backing") {
  Limits limits;
  limits.table_threshold = 1024;
  const auto g = wreath_cyclic(2, 8, limits);
  CHECK(g.order() == 2048);
  CHECK(g.backing() == Backing::Permutation);
  CHECK(g.table().empty());
  CHECK(verify_group_axioms(direct_product(dihedral_group(8), dihedral_group(8))));
  const auto big = direct_product(wreath_cyclic(2, 4), wreath_cyclic(2, 4), limits);
  CHECK(big.backing() == Backing::Permutation);
  CHECK(lcs_orders(big) == std::vector<std::size_t>{4096, 64, 16, 4, 1});
  const auto small = wreath_cyclic(2, 4);
  CHECK(small.backing() == Backing::Table);
  CHECK(table_of(small).size() == 64);
}
