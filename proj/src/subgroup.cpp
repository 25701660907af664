#include "lienil/subgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lienil {

void Subgroup::add_generator(Elem x) {
  if (mask_[x]) return;
  generators_.push_back(x);
  // Every product of generators is reached by right multiplication from an
  // existing member; re-scan all members against all generators.
  for (std::size_t head = 0; head < members_.size(); ++head) {
    for (auto s : generators_) {
      auto y = parent_->multiply(members_[head], s);
      if (!mask_[y]) {
        mask_[y] = true;
        members_.push_back(y);
      }
    }
  }
}

Subgroup Subgroup::generated(const FiniteGroup& parent, std::span<const Elem> generators) {
  Subgroup h(parent);
  h.mask_.assign(parent.order(), false);
  h.mask_[kIdentity] = true;
  h.members_.push_back(kIdentity);
  for (auto x : generators) {
    if (x >= parent.order()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
    h.add_generator(x);
  }
  std::sort(h.members_.begin(), h.members_.end());
  return h;
}

Subgroup Subgroup::whole(const FiniteGroup& parent) { return generated(parent, parent.generators()); }

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return generated(parent, {}); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Elem x) { return other.contains(x); });
}

std::uint64_t AbelianType::order() const {
  return std::accumulate(factors.begin(), factors.end(), std::uint64_t{1}, std::multiplies<>());
}

bool AbelianType::is_elementary(unsigned p) const {
  return std::all_of(factors.begin(), factors.end(), [p](auto f) { return f == p; });
}

std::string AbelianType::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "," : "") << factors[i];
  os << ")";
  return os.str();
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens) {
  return Subgroup::generated(g, gens);
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> elems) {
  std::vector<Elem> gens(elems.begin(), elems.end());
  auto h = Subgroup::generated(g, gens);
  for (;;) {
    bool grew = false;
    for (auto x : h.generators()) {
      for (auto s : g.generators()) {
        auto c = g.conjugate(x, s);
        if (!h.contains(c)) {
          gens = h.generators();
          gens.push_back(c);
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
    if (!grew) return h;
    h = Subgroup::generated(g, gens);
  }
}

Subgroup commutator_subgroup(const Subgroup& h, const FiniteGroup& g) {
  // [H,G] is normal in G and is the normal closure of the commutators of
  // generators: (xy,z) = (x,z)^y (y,z) and (x,yz) = (x,z)(x,y)^z.
  std::vector<Elem> comms;
  for (auto x : h.generators())
    for (auto y : g.generators()) {
      auto c = commutator(g, x, y);
      if (c != kIdentity) comms.push_back(c);
    }
  return normal_closure(g, comms);
}

Subgroup commutator_subgroup_bruteforce(const Subgroup& h, const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> comms;
  for (auto x : h.members())
    for (Elem y = 0; y < g.order(); ++y) {
      auto c = commutator(g, x, y);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return Subgroup::generated(g, comms);
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  for (;;) {
    auto next = commutator_subgroup(series.back(), g);
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).back().is_trivial(); }

std::size_t nilpotency_class(const FiniteGroup& g) {
  auto series = lower_central_series(g);
  if (!series.back().is_trivial())
    throw Error(ErrorKind::NotNilpotent,
                "lower central series stabilises at order " + std::to_string(series.back().order()));
  return series.size() - 1;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto s : g.generators())
      if (g.multiply(x, s) != g.multiply(s, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return Subgroup::generated(g, z);
}

namespace {

std::optional<std::pair<Elem, Elem>> normality_violation(const Subgroup& h) {
  const auto& g = h.parent();
  for (auto x : h.generators())
    for (auto s : g.generators())
      if (!h.contains(g.conjugate(x, s))) return std::pair{x, s};
  return std::nullopt;
}

}  // namespace

bool is_normal(const Subgroup& h) { return !normality_violation(h).has_value(); }

bool is_abelian(const Subgroup& h) {
  const auto& g = h.parent();
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.multiply(gens[i], gens[j]) != g.multiply(gens[j], gens[i])) return false;
  return true;
}

bool is_central(const Subgroup& h) {
  const auto& g = h.parent();
  for (auto x : h.generators())
    for (auto s : g.generators())
      if (g.multiply(x, s) != g.multiply(s, x)) return false;
  return true;
}

Subgroup Quotient::image(const Subgroup& h) const {
  std::vector<Elem> gens;
  gens.reserve(h.generators().size());
  for (auto x : h.generators()) gens.push_back(projection[x]);
  return Subgroup::generated(group, gens);
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n, const Limits& limits) {
  if (auto bad = normality_violation(n)) {
    throw Error(ErrorKind::NotNormal, "conjugate of element " + std::to_string(bad->first) + " by " +
                                          std::to_string(bad->second) + " leaves the subgroup");
  }
  constexpr Elem kUnassigned = ~Elem{0};
  std::vector<Elem> projection(g.order(), kUnassigned);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (projection[x] != kUnassigned) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (auto y : n.members()) projection[g.multiply(x, y)] = id;
  }
  const auto k = reps.size();
  if (k > limits.table_threshold)
    throw Error(ErrorKind::CapExceeded, "quotient of order " + std::to_string(k) + " is too large for a table");
  std::vector<std::vector<Elem>> table(k, std::vector<Elem>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i][j] = projection[g.multiply(reps[i], reps[j])];
  return Quotient{FiniteGroup::from_table(table, limits), std::move(projection), std::move(reps)};
}

Subgroup power_subgroup(const Subgroup& h, std::uint64_t q) {
  const auto& g = h.parent();
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> powers;
  for (auto x : h.members()) {
    auto y = g.power(x, q);
    if (!seen[y]) {
      seen[y] = true;
      powers.push_back(y);
    }
  }
  return Subgroup::generated(g, powers);
}

Subgroup product_of_subgroups(const Subgroup& a, const Subgroup& b) {
  if (&a.parent() != &b.parent()) throw Error(ErrorKind::InvalidArgument, "subgroups of different groups");
  if (!is_normal(a) || !is_normal(b)) throw Error(ErrorKind::NotNormal, "product factor is not normal");
  std::vector<Elem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::generated(a.parent(), gens);
}

std::optional<unsigned> log_p(std::uint64_t n, unsigned p) {
  if (n == 0) return std::nullopt;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

AbelianType abelian_invariants(const Subgroup& h) {
  if (!is_abelian(h)) throw Error(ErrorKind::NotAbelian, "subgroup of order " + std::to_string(h.order()));
  const auto& g = h.parent();
  std::map<Elem, std::uint64_t> orders;
  for (auto x : h.members()) orders[x] = element_order(g, x);

  std::vector<unsigned> primes;
  {
    std::uint64_t m = h.order();
    for (unsigned p = 2; static_cast<std::uint64_t>(p) * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(static_cast<unsigned>(m));
  }

  AbelianType type;
  for (auto p : primes) {
    // omega[k] = log_p |{x in Sylow_p : x^(p^k) = 1}| = sum_i min(lambda_i, k).
    std::vector<unsigned> omega{0};
    std::uint64_t pk = 1;
    for (;;) {
      pk *= p;
      std::uint64_t count = 0;
      for (const auto& [x, o] : orders)
        if (pk % o == 0) ++count;
      auto w = log_p(count, p);
      if (!w) throw Error(ErrorKind::Internal, "Omega subgroup order is not a prime power");
      if (*w == omega.back()) break;
      omega.push_back(*w);
    }
    // Parts of size >= k: omega[k] - omega[k-1].
    std::vector<unsigned> at_least(omega.size() + 1, 0);
    for (std::size_t k = 1; k < omega.size(); ++k) at_least[k] = omega[k] - omega[k - 1];
    std::uint64_t pe = 1;
    for (std::size_t k = 1; k < omega.size(); ++k) {
      pe *= p;
      for (unsigned c = 0; c < at_least[k] - at_least[k + 1]; ++c) type.factors.push_back(pe);
    }
  }
  std::sort(type.factors.begin(), type.factors.end(), std::greater<>());
  return type;
}

std::uint64_t exponent(const Subgroup& h) {
  std::uint64_t e = 1;
  for (auto x : h.members()) e = std::lcm(e, static_cast<std::uint64_t>(element_order(h.parent(), x)));
  return e;
}

bool is_p_group(const Subgroup& h, unsigned p) { return log_p(h.order(), p).has_value(); }

}  // namespace lienil
