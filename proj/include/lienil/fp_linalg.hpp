#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lienil/error.hpp"

namespace lienil {

using FpVector = std::vector<std::uint32_t>;

// Which implementation of the batch kernels to run. Both produce the same
// reduced echelon form; Serial is the reference the parallel path is tested
// against.
enum class Exec { Serial, Parallel };

// Subspace of GF(p)^dim held as a reduced row echelon basis: every row has a
// leading 1 in its pivot column, other rows are zero there, and rows are
// sorted by pivot.
class FpSubspace {
 public:
  FpSubspace(std::size_t dim, unsigned p);

  static FpSubspace full(std::size_t dim, unsigned p);

  std::size_t ambient_dimension() const noexcept { return dim_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  unsigned prime() const noexcept { return p_; }
  const std::vector<FpVector>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Subtracts multiples of basis rows until v is zero on every pivot column.
  void reduce(FpVector& v) const;
  bool contains(FpVector v) const;

  // Adds v to the span. Returns the reduced form of v if it was new, an
  // empty vector otherwise.
  FpVector insert(FpVector v);

  // Inserts a batch; returns the reduced forms that enlarged the span.
  std::vector<FpVector> insert_batch(std::vector<FpVector> candidates, Exec exec);

  friend bool operator==(const FpSubspace& a, const FpSubspace& b) {
    return a.dim_ == b.dim_ && a.p_ == b.p_ && a.rows_ == b.rows_;
  }

 private:
  void check(const FpVector& v) const;

  std::size_t dim_;
  unsigned p_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

FpSubspace echelonize(std::span<const FpVector> vectors, std::size_t dim, unsigned p, Exec exec = Exec::Parallel);
FpSubspace subspace_sum(const FpSubspace& a, const FpSubspace& b);
bool subspace_contains(const FpSubspace& s, const FpVector& v);

std::uint32_t inverse_mod(std::uint32_t a, unsigned p);

}  // namespace lienil
