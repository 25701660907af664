#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lienil/group.hpp"

namespace lienil {

// A subgroup of a FiniteGroup as a sorted set of element indices together
// with a generating set. The parent group must outlive the subgroup.
class Subgroup {
 public:
  // Closure of the given elements.
  static Subgroup generated(const FiniteGroup& parent, std::span<const Elem> generators);
  static Subgroup whole(const FiniteGroup& parent);
  static Subgroup trivial(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool contains(Elem x) const { return mask_[x]; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  bool is_subset_of(const Subgroup& other) const;

  // Equality compares member sets only.
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  explicit Subgroup(const FiniteGroup& parent) : parent_(&parent) {}
  void add_generator(Elem x);

  const FiniteGroup* parent_;
  std::vector<Elem> members_;  // sorted
  std::vector<Elem> generators_;
  std::vector<bool> mask_;
};

// An abelian group as a non-increasing list of prime-power cyclic orders.
struct AbelianType {
  std::vector<std::uint64_t> factors;

  std::uint64_t order() const;
  bool is_cyclic() const { return factors.size() <= 1; }
  bool is_elementary(unsigned p) const;
  std::string to_string() const;
  friend bool operator==(const AbelianType&, const AbelianType&) = default;
};

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens);

// Smallest normal subgroup of g containing the given elements.
Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> elems);

// (H, G): generated by all (x, y) with x in h and y in g. Computed as the
// normal closure of commutators of generators.
Subgroup commutator_subgroup(const Subgroup& h, const FiniteGroup& g);

// Same result computed from every pair of elements; kept as a reference
// for tests.
Subgroup commutator_subgroup_bruteforce(const Subgroup& h, const FiniteGroup& g);

// [gamma_1 = G, gamma_2, ...] until the series stabilises; the repeated
// final term is not duplicated.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);

bool is_nilpotent(const FiniteGroup& g);

// Smallest c with gamma_{c+1} = 1. Throws NotNilpotent.
std::size_t nilpotency_class(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g);

bool is_normal(const Subgroup& h);
bool is_abelian(const Subgroup& h);
bool is_central(const Subgroup& h);

struct Quotient {
  FiniteGroup group;
  // Element index of g -> coset index in `group`.
  std::vector<Elem> projection;
  // Coset index -> minimal element index of the coset.
  std::vector<Elem> representatives;

  // Image of a subgroup of the parent under the projection.
  Subgroup image(const Subgroup& h) const;
};

// Coset group with table backing; cosets are numbered by increasing minimal
// representative. Throws NotNormal naming a violating conjugation.
Quotient quotient(const FiniteGroup& g, const Subgroup& n, const Limits& limits = {});

// Generated by { x^q : x in h }.
Subgroup power_subgroup(const Subgroup& h, std::uint64_t q);

// Generated by a and b; both must be normal in the parent.
Subgroup product_of_subgroups(const Subgroup& a, const Subgroup& b);

// Throws NotAbelian.
AbelianType abelian_invariants(const Subgroup& h);

std::uint64_t exponent(const Subgroup& h);
bool is_p_group(const Subgroup& h, unsigned p);

// If n = p^k returns k, else nullopt. n = 1 gives 0.
std::optional<unsigned> log_p(std::uint64_t n, unsigned p);

}  // namespace lienil
