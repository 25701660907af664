#include "doctest.h"
#include "lienil/constructions.hpp"
#include "lienil/lie_dimension.hpp"

using namespace lienil;

namespace {

DVector dv(unsigned p, unsigned n, unsigned l, std::map<std::size_t, unsigned> e) {
  DVector d;
  d.prime = p;
  d.n = n;
  d.l = l;
  d.entries = std::move(e);
  return d;
}

// D(m) computed from the definition over all (j, i): generated by gamma_j^{p^i}
// for (j-1) p^i >= m - 1, without the exponent cut-off used by the library.
std::vector<std::size_t> naive_orders(const FiniteGroup& g, unsigned p) {
  const auto gamma = lower_central_series(g);
  std::vector<std::size_t> out{g.order()};
  for (std::size_t m = 2;; ++m) {
    std::vector<Elem> gens;
    for (std::size_t j = 2; j <= gamma.size(); ++j)
      for (std::uint64_t q = 1; q <= g.order(); q *= p)
        if ((j - 1) * q >= m - 1)
          for (Elem x : gamma[j - 1].members()) gens.push_back(g.power(x, q));
    const auto d = subgroup_generated(g, gens);
    out.push_back(d.order());
    if (d.is_trivial()) return out;
  }
}

}  // namespace

TEST_CASE("Lie nilpotency criterion") {
  CHECK(is_lie_nilpotent(dihedral_group(8), 2));
  CHECK_FALSE(is_lie_nilpotent(dihedral_group(8), 3));
  CHECK(is_lie_nilpotent(cyclic_group(6), 5));
  const auto s3 = dihedral_group(6);
  for (unsigned p : {2u, 3u, 5u}) CHECK_FALSE(is_lie_nilpotent(s3, p));
  CHECK_THROWS_AS(series_recursive(s3, Prime(3)), Error);
}

TEST_CASE("D16 at p = 2") {
  const auto g = dihedral_group(16);
  const auto s = series_recursive(g, Prime(2));
  CHECK(s.orders() == std::vector<std::size_t>{16, 4, 2, 1});
  CHECK(same_terms(s, series_product(g, Prime(2))));
  const auto d = d_vector(s);
  CHECK(d == dv(2, 2, 2, {{2, 1}, {3, 1}}));
  CHECK(upper_index_jennings(d) == 5);
  CHECK(verify_sum_rule(d));
  CHECK(s.term(10).is_trivial());
}

TEST_CASE("floor rounding is caught by the route comparison") {
  const auto g = dihedral_group(16);
  const auto wrong = detail::series_recursive_with(g, Prime(2), detail::Rounding::Floor);
  // D(4) would keep a^4
  CHECK(wrong.term(4).order() == 2);
  CHECK_FALSE(same_terms(wrong, series_product(g, Prime(2))));
  CHECK(same_terms(detail::series_recursive_with(g, Prime(2), detail::Rounding::Ceiling), series_product(g, Prime(2))));
}

TEST_CASE("routes agree with the naive definition") {
  struct Case {
    FiniteGroup g;
    unsigned p;
  };
  const std::vector<Case> cases{{dihedral_group(8), 2},  {quaternion_group(), 2},     {dihedral_group(32), 2},
                                {wreath_cyclic(2, 2), 2}, {wreath_cyclic(2, 4), 2},   {extraspecial_group(3), 3},
                                {wreath_cyclic(3, 3), 3}, {extraspecial_group(5), 5}, {cyclic_group(9), 3}};
  for (const auto& c : cases) {
    const auto r = series_recursive(c.g, Prime(c.p));
    CHECK(same_terms(r, series_product(c.g, Prime(c.p))));
    CHECK(r.orders() == naive_orders(c.g, c.p));
  }
}

TEST_CASE("d-vectors and Jennings indices") {
  const auto idx = [](const FiniteGroup& g, unsigned p) {
    return upper_index_jennings(d_vector(series_recursive(g, Prime(p))));
  };
  CHECK(idx(dihedral_group(8), 2) == 3);
  CHECK(idx(quaternion_group(), 2) == 3);
  CHECK(idx(direct_product(dihedral_group(8), dihedral_group(8)), 2) == 4);
  CHECK(idx(wreath_cyclic(2, 4), 2) == 8);
  CHECK(idx(extraspecial_group(3), 3) == 4);
  CHECK(idx(wreath_cyclic(3, 3), 3) == 8);
  CHECK(idx(extraspecial_group(5), 5) == 6);
  CHECK(idx(cyclic_group(8), 2) == 2);

  const auto d = d_vector(series_recursive(wreath_cyclic(2, 8), Prime(2)));
  CHECK(d.n == 7);
  for (std::size_t k = 2; k <= 8; ++k) CHECK(d.at(k) == 1);
  CHECK(d.at(9) == 0);
  CHECK(upper_index_jennings(d) == 30);

  CHECK(d_vector(series_recursive(wreath_cyclic(3, 3), Prime(3))) == dv(3, 2, 1, {{2, 1}, {3, 1}}));
}

TEST_CASE("sum rule detects a corrupted vector") {
  CHECK(verify_sum_rule(dv(2, 3, 1, {{2, 1}, {3, 1}, {4, 1}})));
  CHECK_FALSE(verify_sum_rule(dv(2, 3, 1, {{2, 1}, {3, 1}})));
  CHECK(upper_index_jennings(dv(3, 0, 0, {})) == 2);
}

TEST_CASE("vanishing criteria hold on constructed groups") {
  CHECK(shalev_vanishing_report(wreath_cyclic(2, 4), Prime(2)).empty());
  CHECK(shalev_vanishing_report(wreath_cyclic(2, 8), Prime(2)).empty());
  CHECK(shalev_vanishing_report(wreath_cyclic(3, 3), Prime(3)).empty());
  CHECK(shalev_vanishing_report(dihedral_group(32), Prime(2)).empty());
}

TEST_CASE("series pass to quotients by central dimension subgroups") {
  const auto g = wreath_cyclic(2, 4);
  const auto s = series_recursive(g, Prime(2));
  // n = 3, H = D(4)
  const auto h = s.term(4);
  REQUIRE(h.order() == 2);
  CHECK(quotient_series_check(g, Prime(2), h));

  const auto w = wreath_cyclic(3, 3);
  CHECK(quotient_series_check(w, Prime(3), series_recursive(w, Prime(3)).term(3)));

  const auto gamma2 = lower_central_series(g)[1];
  CHECK_THROWS_AS(quotient_series_check(g, Prime(2), gamma2), Error);
}
