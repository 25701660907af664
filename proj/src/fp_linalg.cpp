#include "lienil/fp_linalg.hpp"

#include <algorithm>
#include <string>

namespace lienil {

std::uint32_t inverse_mod(std::uint32_t a, unsigned p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

FpSubspace::FpSubspace(std::size_t dim, unsigned p) : dim_(dim), p_(p) {
  if (p < 2 || p > 65535) throw Error(ErrorKind::InvalidArgument, "field characteristic out of range");
}

FpSubspace FpSubspace::full(std::size_t dim, unsigned p) {
  FpSubspace s(dim, p);
  for (std::size_t i = 0; i < dim; ++i) {
    FpVector e(dim, 0);
    e[i] = 1;
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

void FpSubspace::check(const FpVector& v) const {
  if (v.size() != dim_)
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in ambient dimension " + std::to_string(dim_));
}

void FpSubspace::reduce(FpVector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto c = pivots_[r];
    if (v[c] == 0) continue;
    const std::uint32_t f = p_ - v[c];  // add f * row to cancel column c
    const auto& row = rows_[r];
    for (std::size_t j = c; j < dim_; ++j)
      if (row[j]) v[j] = (v[j] + f * row[j]) % p_;
  }
}

bool FpSubspace::contains(FpVector v) const {
  check(v);
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

FpVector FpSubspace::insert(FpVector v) {
  check(v);
  reduce(v);
  auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
  if (lead == v.end()) return {};
  const auto c = static_cast<std::size_t>(lead - v.begin());
  const std::uint32_t inv = inverse_mod(v[c], p_);
  FpVector row = v;
  for (std::size_t j = c; j < dim_; ++j) row[j] = static_cast<std::uint32_t>(row[j] * inv % p_);
  // Clear column c from the existing rows.
  for (auto& other : rows_) {
    if (other[c] == 0) continue;
    const std::uint32_t f = p_ - other[c];
    for (std::size_t j = c; j < dim_; ++j)
      if (row[j]) other[j] = (other[j] + f * row[j]) % p_;
  }
  const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin());
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), c);
  return v;
}

std::vector<FpVector> FpSubspace::insert_batch(std::vector<FpVector> candidates, Exec exec) {
  for (const auto& v : candidates) check(v);
  std::vector<FpVector> added;
  if (exec == Exec::Serial) {
    for (auto& v : candidates) {
      auto r = insert(std::move(v));
      if (!r.empty()) added.push_back(std::move(r));
    }
    return added;
  }
  // Reduce every candidate against the current basis independently, then
  // merge the survivors serially (they may still depend on each other).
  const auto count = static_cast<std::int64_t>(candidates.size());
  std::vector<char> nonzero(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    reduce(candidates[i]);
    nonzero[i] = std::any_of(candidates[i].begin(), candidates[i].end(), [](auto x) { return x != 0; });
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!nonzero[i]) continue;
    auto r = insert(std::move(candidates[i]));
    if (!r.empty()) added.push_back(std::move(r));
  }
  return added;
}

FpSubspace echelonize(std::span<const FpVector> vectors, std::size_t dim, unsigned p, Exec exec) {
  FpSubspace s(dim, p);
  s.insert_batch(std::vector<FpVector>(vectors.begin(), vectors.end()), exec);
  return s;
}

FpSubspace subspace_sum(const FpSubspace& a, const FpSubspace& b) {
  if (a.ambient_dimension() != b.ambient_dimension() || a.prime() != b.prime())
    throw Error(ErrorKind::DimensionMismatch, "subspaces live in different spaces");
  FpSubspace s = a;
  s.insert_batch(b.basis(), Exec::Serial);
  return s;
}

bool subspace_contains(const FpSubspace& s, const FpVector& v) { return s.contains(v); }

}  // namespace lienil
