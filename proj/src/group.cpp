#include "lienil/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace lienil {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotLieNilpotent: return "NotLieNilpotent";
    case ErrorKind::IndexNotPPower: return "IndexNotPPower";
    case ErrorKind::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownConstruction: return "UnknownConstruction";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
    case ErrorKind::NoWitnessFound: return "NoWitnessFound";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(unsigned value) : value_(value) {
  if (!is_prime(value)) throw Error(ErrorKind::InvalidArgument, std::to_string(value) + " is not prime");
}

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

void check_cap(std::size_t order, const Limits& limits) {
  if (order > limits.order_cap)
    throw Error(ErrorKind::CapExceeded,
                "order " + std::to_string(order) + " exceeds cap " + std::to_string(limits.order_cap));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
  return r;
}

bool is_bijection(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) return false;
  std::vector<bool> seen(degree, false);
  for (auto v : p) {
    if (v >= degree || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

std::size_t FiniteGroup::PermHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table, const Limits& limits) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::NoIdentity, "empty table");
  check_cap(n, limits);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw Error(ErrorKind::InvalidArgument, "row " + std::to_string(i) + " has wrong length");
    for (auto v : table[i])
      if (v >= n) throw Error(ErrorKind::InvalidArgument, "entry out of range in row " + std::to_string(i));
  }

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
    if (ok) e = c;
  }
  if (e == n) throw Error(ErrorKind::NoIdentity, "no two-sided identity in table");

  // Relabel so the identity sits at index 0 (swap e and 0).
  std::vector<Elem> relabel(n);
  std::iota(relabel.begin(), relabel.end(), Elem{0});
  std::swap(relabel[0], relabel[e]);

  FiniteGroup g;
  g.order_ = n;
  g.backing_ = Backing::Table;
  g.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g.table_[relabel[a] * n + relabel[b]] = relabel[table[a][b]];

  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      if (g.table_[a * n + b] == kIdentity && g.table_[b * n + a] == kIdentity) {
        g.inverse_[a] = static_cast<Elem>(b);
        found = true;
      }
    }
    if (!found)
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(relabel[a]) + " has no inverse");
  }

  auto mul = [&](std::size_t a, std::size_t b) { return g.table_[a * n + b]; };
  if (n <= limits.assoc_exhaustive_limit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto ab = mul(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            throw Error(ErrorKind::NotAssociative,
                        "triple " + triple(relabel[a], relabel[b], relabel[c]));
      }
    g.compute_generators();
  } else {
    // Light's test: (x s) y == x (s y) for every generator s suffices.
    g.compute_generators();
    for (auto s : g.generators_)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (mul(mul(x, s), y) != mul(x, mul(s, y)))
            throw Error(ErrorKind::NotAssociative, "triple " + triple(relabel[x], relabel[s], relabel[y]));
  }
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                           const Limits& limits) {
  if (degree == 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!is_bijection(generators[i], degree))
      throw Error(ErrorKind::InvalidArgument, "generator " + std::to_string(i) + " is not a bijection");

  FiniteGroup g;
  g.degree_ = degree;
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  g.perms_.push_back(id);
  g.perm_index_.emplace(id, 0);
  for (std::size_t head = 0; head < g.perms_.size(); ++head) {
    for (const auto& s : generators) {
      auto next = compose(g.perms_[head], s);
      if (g.perm_index_.contains(next)) continue;
      if (g.perms_.size() + 1 > limits.order_cap)
        throw Error(ErrorKind::CapExceeded,
                    "closure exceeds cap " + std::to_string(limits.order_cap));
      g.perm_index_.emplace(next, static_cast<Elem>(g.perms_.size()));
      g.perms_.push_back(std::move(next));
    }
  }
  g.finish_permutation_backing(limits);
  return g;
}

FiniteGroup FiniteGroup::from_permutation_elements(std::size_t degree, std::vector<Permutation> elements,
                                                   const Limits& limits) {
  if (elements.empty()) throw Error(ErrorKind::NoIdentity, "no elements");
  check_cap(elements.size(), limits);
  FiniteGroup g;
  g.degree_ = degree;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!is_bijection(elements[i], degree))
      throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(i) + " is not a bijection");
    if (!g.perm_index_.emplace(elements[i], static_cast<Elem>(i)).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate element " + std::to_string(i));
  }
  for (std::size_t x = 0; x < degree; ++x)
    if (elements[0][x] != x) throw Error(ErrorKind::NoIdentity, "element 0 is not the identity");
  g.perms_ = std::move(elements);
  g.finish_permutation_backing(limits);
  return g;
}

void FiniteGroup::finish_permutation_backing(const Limits& limits) {
  order_ = perms_.size();
  backing_ = Backing::Permutation;
  inverse_.assign(order_, 0);
  for (std::size_t i = 0; i < order_; ++i) {
    Permutation inv(degree_);
    for (std::size_t x = 0; x < degree_; ++x) inv[perms_[i][x]] = static_cast<std::uint32_t>(x);
    auto it = perm_index_.find(inv);
    if (it == perm_index_.end())
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(i) + " has no inverse in the set");
    inverse_[i] = it->second;
  }

  if (order_ <= limits.table_threshold) {
    std::vector<Elem> table(order_ * order_);
    const auto n = static_cast<std::int64_t>(order_);
    bool closed = true;
#pragma omp parallel for schedule(static) reduction(&& : closed)
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        auto it = perm_index_.find(compose(perms_[a], perms_[b]));
        if (it == perm_index_.end()) {
          closed = false;
          continue;
        }
        table[a * n + b] = it->second;
      }
    }
    if (!closed) throw Error(ErrorKind::InvalidArgument, "element set is not closed under composition");
    table_ = std::move(table);
    backing_ = Backing::Table;
  }
  compute_generators();
}

Elem FiniteGroup::multiply_permutations(Elem a, Elem b) const {
  auto it = perm_index_.find(compose(perms_[a], perms_[b]));
  if (it == perm_index_.end()) throw Error(ErrorKind::Internal, "permutation product left the group");
  return it->second;
}

Elem FiniteGroup::power(Elem a, std::uint64_t k) const {
  Elem result = kIdentity;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

void FiniteGroup::compute_generators() {
  // Greedy: scan elements in index order, keep each one not yet in the
  // subgroup generated by those kept so far.
  generators_.clear();
  std::vector<bool> in(order_, false);
  std::vector<Elem> members{kIdentity};
  in[kIdentity] = true;
  for (Elem x = 1; x < order_; ++x) {
    if (in[x]) continue;
    generators_.push_back(x);
    // Re-close: every member times every generator.
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (auto s : generators_) {
        auto y = multiply(members[head], s);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
    if (members.size() == order_) break;
  }
}

Permutation FiniteGroup::as_permutation(Elem a) const {
  if (!perms_.empty()) return perms_[a];
  Permutation p(order_);
  for (Elem x = 0; x < order_; ++x) p[x] = multiply(x, a);
  return p;
}

std::size_t FiniteGroup::permutation_degree() const noexcept {
  return perms_.empty() ? order_ : degree_;
}

void FiniteGroup::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order_)
    throw Error(ErrorKind::InvalidArgument, "label count does not match order");
  labels_ = std::move(labels);
}

std::size_t element_order(const FiniteGroup& g, Elem x) {
  std::size_t k = 1;
  for (Elem y = x; y != kIdentity; y = g.multiply(y, x)) ++k;
  return k;
}

Elem commutator(const FiniteGroup& g, Elem x, Elem y) {
  return g.multiply(g.multiply(g.inverse(x), g.inverse(y)), g.multiply(x, y));
}

bool verify_group_axioms(const FiniteGroup& g) {
  const auto n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a) {
    if (g.multiply(a, kIdentity) != a || g.multiply(kIdentity, a) != a) return false;
    if (g.multiply(a, g.inverse(a)) != kIdentity || g.multiply(g.inverse(a), a) != kIdentity) return false;
    for (Elem b = 0; b < n; ++b) {
      const auto ab = g.multiply(a, b);
      for (Elem c = 0; c < n; ++c)
        if (g.multiply(ab, c) != g.multiply(a, g.multiply(b, c))) return false;
    }
  }
  return true;
}

}  // namespace lienil
