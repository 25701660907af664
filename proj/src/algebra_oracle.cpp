#include "lienil/algebra_oracle.hpp"

#include <string>

namespace lienil {

GroupAlgebra::GroupAlgebra(const FiniteGroup& g, Prime p, const OracleOptions& options)
    : group_(&g), p_(p), options_(options) {
  if (g.order() > options.oracle_cap)
    throw Error(ErrorKind::OracleCapExceeded, "group of order " + std::to_string(g.order()) +
                                                  " exceeds oracle cap " + std::to_string(options.oracle_cap));
  if (options_.limit == 0) options_.limit = g.order() + 2;
}

FpVector GroupAlgebra::basis_element(Elem g) const {
  auto v = zero();
  v[g] = 1;
  return v;
}

FpVector GroupAlgebra::multiply(const FpVector& x, const FpVector& y) const {
  auto out = zero();
  const auto n = static_cast<Elem>(dimension());
  for (Elem u = 0; u < n; ++u) {
    if (!x[u]) continue;
    for (Elem v = 0; v < n; ++v)
      if (y[v]) {
        auto& c = out[group_->multiply(u, v)];
        c = static_cast<std::uint32_t>((c + static_cast<std::uint64_t>(x[u]) * y[v]) % p_);
      }
  }
  return out;
}

FpVector GroupAlgebra::add(const FpVector& x, const FpVector& y) const {
  auto out = zero();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (x[i] + y[i]) % p_;
  return out;
}

FpVector GroupAlgebra::subtract(const FpVector& x, const FpVector& y) const {
  auto out = zero();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (x[i] + p_ - y[i]) % p_;
  return out;
}

FpVector GroupAlgebra::lie_bracket(const FpVector& x, const FpVector& y) const {
  return subtract(multiply(x, y), multiply(y, x));
}

FpVector GroupAlgebra::left_by(Elem s, const FpVector& x) const {
  auto out = zero();
  for (Elem h = 0; h < dimension(); ++h) out[group_->multiply(s, h)] = x[h];
  return out;
}

FpVector GroupAlgebra::right_by(const FpVector& x, Elem s) const {
  auto out = zero();
  for (Elem h = 0; h < dimension(); ++h) out[group_->multiply(h, s)] = x[h];
  return out;
}

FpVector GroupAlgebra::bracket_with(const FpVector& x, Elem s) const {
  auto out = zero();
  for (Elem h = 0; h < dimension(); ++h) {
    out[group_->multiply(h, s)] += x[h];
    out[group_->multiply(s, h)] += p_ - x[h];
  }
  for (auto& c : out) c %= p_;
  return out;
}

FpSubspace GroupAlgebra::ideal_generated(const FpSubspace& gens) const {
  FpSubspace ideal(dimension(), p_);
  auto frontier = ideal.insert_batch(gens.basis(), options_.exec);
  const auto mults = group_->generators();
  // Closing under multiplication by generators on both sides closes under
  // the whole group, hence under KG.
  while (!frontier.empty()) {
    const auto width = 2 * mults.size();
    std::vector<FpVector> candidates(frontier.size() * width);
    const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(static) if (options_.exec == Exec::Parallel)
    for (std::int64_t i = 0; i < count; ++i)
      for (std::size_t k = 0; k < mults.size(); ++k) {
        candidates[i * width + 2 * k] = left_by(mults[k], frontier[i]);
        candidates[i * width + 2 * k + 1] = right_by(frontier[i], mults[k]);
      }
    frontier = ideal.insert_batch(std::move(candidates), options_.exec);
  }
  return ideal;
}

const FpSubspace& LiePowers::power(std::size_t n) const {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "Lie powers are indexed from 1");
  return n <= powers.size() ? powers[n - 1] : powers.back();
}

namespace {

// span{ [b, delta_g] : b in basis, g in G }
FpSubspace bracket_span(const GroupAlgebra& algebra, const FpSubspace& s) {
  const auto n = algebra.dimension();
  const auto& basis = s.basis();
  std::vector<FpVector> candidates(basis.size() * n);
  const auto count = static_cast<std::int64_t>(basis.size());
#pragma omp parallel for schedule(static) if (algebra.options().exec == Exec::Parallel)
  for (std::int64_t i = 0; i < count; ++i)
    for (Elem g = 0; g < n; ++g) candidates[i * n + g] = algebra.bracket_with(basis[i], g);
  FpSubspace out(n, algebra.prime());
  out.insert_batch(std::move(candidates), algebra.options().exec);
  return out;
}

void push(LiePowers& lp, FpSubspace s) {
  lp.dims.push_back(s.dimension());
  lp.powers.push_back(std::move(s));
}

}  // namespace

LiePowers upper_lie_powers(const GroupAlgebra& algebra) {
  LiePowers lp;
  push(lp, FpSubspace::full(algebra.dimension(), algebra.prime()));
  while (lp.powers.back().dimension() > 0) {
    if (lp.powers.size() >= algebra.options().limit)
      throw Error(ErrorKind::NoConvergence, "upper Lie powers still nonzero at n = " + std::to_string(lp.powers.size()));
    auto next = algebra.ideal_generated(bracket_span(algebra, lp.powers.back()));
    if (next.dimension() == lp.powers.back().dimension())
      throw Error(ErrorKind::NoConvergence,
                  "upper Lie powers stabilise at dimension " + std::to_string(next.dimension()));
    push(lp, std::move(next));
  }
  lp.index = lp.powers.size();
  return lp;
}

LiePowers lower_lie_powers(const GroupAlgebra& algebra) {
  LiePowers lp;
  auto span = FpSubspace::full(algebra.dimension(), algebra.prime());
  push(lp, span);
  while (lp.powers.back().dimension() > 0) {
    if (lp.powers.size() >= algebra.options().limit)
      throw Error(ErrorKind::NoConvergence, "lower Lie powers still nonzero at n = " + std::to_string(lp.powers.size()));
    auto next_span = bracket_span(algebra, span);
    // L_{n+1} is contained in L_n; equality means the sequence is stuck.
    if (next_span.dimension() == span.dimension())
      throw Error(ErrorKind::NoConvergence,
                  "lower Lie spans stabilise at dimension " + std::to_string(span.dimension()));
    span = std::move(next_span);
    push(lp, algebra.ideal_generated(span));
  }
  lp.index = lp.powers.size();
  return lp;
}

Subgroup dimension_subgroup_direct(const GroupAlgebra& algebra, const LiePowers& upper, std::size_t m) {
  const auto& g = algebra.group();
  const auto& power = upper.power(m);
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    auto v = algebra.basis_element(x);
    v[kIdentity] = (v[kIdentity] + algebra.prime() - 1) % algebra.prime();
    if (power.contains(std::move(v))) members.push_back(x);
  }
  return Subgroup::generated(g, members);
}

Subgroup dimension_subgroup_direct(const FiniteGroup& g, Prime p, std::size_t m, const OracleOptions& options) {
  GroupAlgebra algebra(g, p, options);
  return dimension_subgroup_direct(algebra, upper_lie_powers(algebra), m);
}

}  // namespace lienil
