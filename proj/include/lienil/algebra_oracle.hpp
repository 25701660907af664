#pragma once

#include <cstddef>
#include <vector>

#include "lienil/fp_linalg.hpp"
#include "lienil/group.hpp"
#include "lienil/subgroup.hpp"

namespace lienil {

// Brute-force model of the group algebra GF(p)[G]: coordinates are indexed
// by group elements.
struct OracleOptions {
  std::size_t oracle_cap = 128;  // largest |G| the oracle accepts
  std::size_t limit = 0;         // max power index; 0 means |G| + 2
  Exec exec = Exec::Parallel;
};

class GroupAlgebra {
 public:
  GroupAlgebra(const FiniteGroup& g, Prime p, const OracleOptions& options = {});

  const FiniteGroup& group() const noexcept { return *group_; }
  unsigned prime() const noexcept { return p_; }
  std::size_t dimension() const noexcept { return group_->order(); }

  FpVector zero() const { return FpVector(dimension(), 0); }
  FpVector basis_element(Elem g) const;

  // (xy)_g = sum over uv = g of x_u y_v
  FpVector multiply(const FpVector& x, const FpVector& y) const;
  FpVector lie_bracket(const FpVector& x, const FpVector& y) const;
  FpVector add(const FpVector& x, const FpVector& y) const;
  FpVector subtract(const FpVector& x, const FpVector& y) const;

  // delta_s * x and x * delta_s, computed by permuting coordinates.
  FpVector left_by(Elem s, const FpVector& x) const;
  FpVector right_by(const FpVector& x, Elem s) const;
  // [x, delta_s] = x delta_s - delta_s x
  FpVector bracket_with(const FpVector& x, Elem s) const;

  // Least two-sided ideal containing the span of gens.
  FpSubspace ideal_generated(const FpSubspace& gens) const;

  const OracleOptions& options() const noexcept { return options_; }

 private:
  const FiniteGroup* group_;
  unsigned p_;
  OracleOptions options_;
};

struct LiePowers {
  std::vector<FpSubspace> powers;  // powers[n-1] is the n-th power
  std::vector<std::size_t> dims;
  std::size_t index = 0;  // minimal n with the n-th power zero

  // The n-th power, zero past the end.
  const FpSubspace& power(std::size_t n) const;
};

// R^(1) = KG, R^(n+1) = ideal generated by [R^(n), KG]. Throws
// OracleCapExceeded or NoConvergence.
LiePowers upper_lie_powers(const GroupAlgebra& algebra);

// L_1 = KG, L_{n+1} = [L_n, KG] (a subspace), R^[n] = ideal generated by L_n.
LiePowers lower_lie_powers(const GroupAlgebra& algebra);

// { g : delta_g - delta_1 in R^(m) }
Subgroup dimension_subgroup_direct(const GroupAlgebra& algebra, const LiePowers& upper, std::size_t m);
Subgroup dimension_subgroup_direct(const FiniteGroup& g, Prime p, std::size_t m, const OracleOptions& options = {});

}  // namespace lienil
