#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lienil/error.hpp"

namespace lienil {

// Elements of a FiniteGroup are referred to by their index in the canonical
// enumeration. Index 0 is always the identity.
using Elem = std::uint32_t;
inline constexpr Elem kIdentity = 0;

// A permutation of {0, ..., degree-1} stored as its image array.
using Permutation = std::vector<std::uint32_t>;

class Prime {
 public:
  explicit Prime(unsigned value);
  unsigned value() const noexcept { return value_; }
  operator unsigned() const noexcept { return value_; }

 private:
  unsigned value_;
};

bool is_prime(std::uint64_t n);

struct Limits {
  // Closures and products larger than this fail with CapExceeded.
  std::size_t order_cap = 65536;
  // Groups up to this order get a dense multiplication table; larger ones
  // multiply by composing permutations.
  std::size_t table_threshold = 4096;
  // Exhaustive associativity check on tables up to this order; larger
  // tables use Light's test over a generating set.
  std::size_t assoc_exhaustive_limit = 512;
};

enum class Backing { Table, Permutation };

class FiniteGroup {
 public:
  // Validates a Cayley table. The identity is moved to index 0 if needed.
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table,
                                const Limits& limits = {});

  // Breadth-first closure of the generators under composition. Permutations
  // act on the right: the product g*h applies g first, then h.
  static FiniteGroup from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                       const Limits& limits = {});

  // Elements given explicitly in their final enumeration order; the first
  // must be the identity and the set must be closed under composition.
  static FiniteGroup from_permutation_elements(std::size_t degree, std::vector<Permutation> elements,
                                               const Limits& limits = {});

  std::size_t order() const noexcept { return order_; }
  Backing backing() const noexcept { return backing_; }

  Elem multiply(Elem a, Elem b) const {
    if (backing_ == Backing::Table) return table_[static_cast<std::size_t>(a) * order_ + b];
    return multiply_permutations(a, b);
  }
  Elem inverse(Elem a) const { return inverse_[a]; }
  Elem power(Elem a, std::uint64_t k) const;
  Elem conjugate(Elem a, Elem by) const { return multiply(inverse(by), multiply(a, by)); }

  // A small generating set, chosen greedily.
  std::span<const Elem> generators() const noexcept { return generators_; }

  // Faithful permutation image of an element: the stored permutation for
  // permutation backing, the right regular representation otherwise.
  Permutation as_permutation(Elem a) const;
  std::size_t permutation_degree() const noexcept;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Dense row-major table; empty for permutation backing.
  std::span<const Elem> table() const noexcept { return table_; }

 private:
  FiniteGroup() = default;
  Elem multiply_permutations(Elem a, Elem b) const;
  void finish_permutation_backing(const Limits& limits);
  void compute_generators();

  struct PermHash {
    std::size_t operator()(const Permutation& p) const noexcept;
  };

  std::size_t order_ = 0;
  Backing backing_ = Backing::Table;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
  std::unordered_map<Permutation, Elem, PermHash> perm_index_;
  std::vector<Elem> generators_;
  std::vector<std::string> labels_;
};

std::size_t element_order(const FiniteGroup& g, Elem x);

// (g,h) = g^-1 h^-1 g h
Elem commutator(const FiniteGroup& g, Elem x, Elem y);

// Checks associativity, identity and inverses exhaustively; used by tests on
// every constructed group.
bool verify_group_axioms(const FiniteGroup& g);

}  // namespace lienil
