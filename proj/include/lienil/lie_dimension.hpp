#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lienil/subgroup.hpp"

namespace lienil {

enum class SeriesRoute { Recursive, Product };

// Lie dimension subgroups [D(1) = G, D(2) = G', D(3), ...], truncated after
// the first trivial term.
struct DimensionSeries {
  unsigned prime = 0;
  SeriesRoute route = SeriesRoute::Recursive;
  std::vector<Subgroup> terms;

  // D(k), 1-based; the trivial subgroup past the end of the stored terms.
  Subgroup term(std::size_t k) const;
  std::vector<std::size_t> orders() const;
};

bool same_terms(const DimensionSeries& a, const DimensionSeries& b);

// p^{d(k)} = [D(k) : D(k+1)] for k >= 2; zero entries are omitted.
struct DVector {
  unsigned prime = 0;
  std::map<std::size_t, unsigned> entries;
  unsigned n = 0;  // |G'| = p^n
  unsigned l = 0;  // exp(G') = p^l

  unsigned at(std::size_t k) const;
  unsigned total() const;
  friend bool operator==(const DVector&, const DVector&) = default;
};

// True iff g is nilpotent with a p-group derived subgroup. Abelian groups
// qualify for every p.
bool is_lie_nilpotent(const FiniteGroup& g, unsigned p);

// D(m+1) = (D(m), G) * D(ceil(m/p) + 1)^p for m >= 2. Throws NotLieNilpotent.
DimensionSeries series_recursive(const FiniteGroup& g, Prime p);

// D(m+1) = product of gamma_j^{p^i} over (j-1) p^i >= m. Throws NotLieNilpotent.
DimensionSeries series_product(const FiniteGroup& g, Prime p);

DVector d_vector(const DimensionSeries& s);

// 2 + (p-1) * sum_{m>=1} m d(m+1)
std::uint64_t upper_index_jennings(const DVector& d);

bool verify_sum_rule(const DVector& d);

struct ShalevViolation {
  std::size_t m;
  std::string reason;
  std::size_t term_order;  // |D(m+1)|, expected 1
};

// For every m with d(m+1) = 0 and (m a power of p, or p^{l-1} | m), checks
// D(m+1) = 1. Returns the failures.
std::vector<ShalevViolation> shalev_vanishing_report(const FiniteGroup& g, Prime p);

// Image of D(m+1)(G) in G/H equals D(m+1)(G/H) for every m. h must be
// central (throws NotCentral).
bool quotient_series_check(const FiniteGroup& g, Prime p, const Subgroup& h);

namespace detail {

enum class Rounding { Ceiling, Floor };

// Recursive route with a selectable rounding of m/p; Floor exists only so
// tests can confirm that the route comparison detects the wrong rule.
DimensionSeries series_recursive_with(const FiniteGroup& g, Prime p, Rounding rounding);

}  // namespace detail

}  // namespace lienil
