#include "lienil/constructions.hpp"

#include <array>
#include <deque>
#include <numeric>
#include <string>

namespace lienil {

namespace {

template <typename Mul>
FiniteGroup from_function(std::size_t n, Mul mul, const Limits& limits) {
  if (n > limits.order_cap)
    throw Error(ErrorKind::CapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.order_cap));
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<Elem>(mul(a, b));
  return FiniteGroup::from_table(table, limits);
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group of order 0");
  if (n <= limits.table_threshold)
    return from_function(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }, limits);
  Permutation cycle(n);
  for (std::size_t x = 0; x < n; ++x) cycle[x] = static_cast<std::uint32_t>((x + 1) % n);
  return FiniteGroup::from_permutations(n, {cycle}, limits);
}

FiniteGroup dihedral_group(std::size_t order, const Limits& limits) {
  if (order < 2 || order % 2 != 0)
    throw Error(ErrorKind::InvalidArgument, "dihedral order must be even and at least 2");
  const std::size_t k = order / 2;
  // r^i s^j at index j*k + i; s r s = r^-1.
  return from_function(
      order,
      [k](std::size_t a, std::size_t b) {
        const std::size_t i1 = a % k, j1 = a / k, i2 = b % k, j2 = b / k;
        const std::size_t i = j1 ? (i1 + k - i2) % k : (i1 + i2) % k;
        return ((j1 + j2) % 2) * k + i;
      },
      limits);
}

FiniteGroup quaternion_group(const Limits& limits) {
  // Units 1, i, j, k at 0..3; index u + 4*s where s = 1 means negated.
  struct Signed {
    int sign;
    std::size_t unit;
  };
  static constexpr std::array<std::array<Signed, 4>, 4> units{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  return from_function(
      8,
      [](std::size_t a, std::size_t b) {
        const auto& u = units[a % 4][b % 4];
        const auto sign = (static_cast<std::size_t>(u.sign) + a / 4 + b / 4) % 2;
        return u.unit + 4 * sign;
      },
      limits);
}

FiniteGroup extraspecial_group(unsigned p, const Limits& limits) {
  if (!is_prime(p) || p == 2)
    throw Error(ErrorKind::InvalidArgument, "exponent-p extraspecial group needs an odd prime");
  const std::size_t q = p;
  // (a, b, c) at index a + p b + p^2 c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  return from_function(
      q * q * q,
      [q](std::size_t x, std::size_t y) {
        const std::size_t a1 = x % q, b1 = (x / q) % q, c1 = x / (q * q);
        const std::size_t a2 = y % q, b2 = (y / q) % q, c2 = y / (q * q);
        return (a1 + a2) % q + q * ((b1 + b2) % q) + q * q * ((c1 + c2 + a1 * b2) % q);
      },
      limits);
}

FiniteGroup wreath_cyclic(std::size_t p, std::size_t q, const Limits& limits) {
  if (p == 0 || q == 0) throw Error(ErrorKind::InvalidArgument, "wreath product needs positive p and q");
  const std::size_t degree = p * q;
  std::vector<Permutation> gens;
  if (p > 1) {
    Permutation base(degree);
    std::iota(base.begin(), base.end(), 0u);
    for (std::size_t r = 0; r < p; ++r) base[r] = static_cast<std::uint32_t>((r + 1) % p);
    gens.push_back(std::move(base));
  }
  if (q > 1) {
    Permutation shift(degree);
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t r = 0; r < p; ++r) shift[b * p + r] = static_cast<std::uint32_t>(((b + 1) % q) * p + r);
    gens.push_back(std::move(shift));
  }
  return FiniteGroup::from_permutations(degree, gens, limits);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > limits.order_cap)
    throw Error(ErrorKind::CapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.order_cap));
  if (n <= limits.table_threshold) {
    return from_function(
        n,
        [&](std::size_t x, std::size_t y) {
          return a.multiply(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb)) * nb +
                 b.multiply(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
        },
        limits);
  }
  // Too large for a table: act on the disjoint union of faithful
  // permutation domains of the factors.
  const std::size_t da = a.permutation_degree(), db = b.permutation_degree();
  std::vector<Permutation> pa(na), pb(nb);
  for (Elem x = 0; x < na; ++x) pa[x] = a.as_permutation(x);
  for (Elem y = 0; y < nb; ++y) pb[y] = b.as_permutation(y);
  std::vector<Permutation> elements;
  elements.reserve(n);
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y) {
      Permutation p(da + db);
      for (std::size_t i = 0; i < da; ++i) p[i] = pa[x][i];
      for (std::size_t i = 0; i < db; ++i) p[da + i] = static_cast<std::uint32_t>(da + pb[y][i]);
      elements.push_back(std::move(p));
    }
  return FiniteGroup::from_permutation_elements(da + db, std::move(elements), limits);
}

namespace {

void check_automorphism(const FiniteGroup& n, const Automorphism& f, Elem h) {
  const auto where = " (action of element " + std::to_string(h) + ")";
  if (f.size() != n.order()) throw Error(ErrorKind::NotAutomorphism, "wrong image count" + where);
  std::vector<bool> hit(n.order(), false);
  for (auto y : f) {
    if (y >= n.order() || hit[y]) throw Error(ErrorKind::NotAutomorphism, "not a bijection" + where);
    hit[y] = true;
  }
  for (Elem x = 0; x < n.order(); ++x)
    for (auto s : n.generators())
      if (f[n.multiply(x, s)] != n.multiply(f[x], f[s]))
        throw Error(ErrorKind::NotAutomorphism,
                    "image of " + std::to_string(x) + "*" + std::to_string(s) + " is not multiplicative" + where);
}

}  // namespace

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const Action& action,
                               const Limits& limits) {
  if (action.size() != h.order())
    throw Error(ErrorKind::NotHomomorphism, "action must assign an automorphism to every element");
  for (Elem x = 0; x < h.order(); ++x) check_automorphism(n, action[x], x);
  for (Elem x = 0; x < h.order(); ++x)
    for (auto s : h.generators()) {
      const auto& lhs = action[h.multiply(x, s)];
      for (Elem y = 0; y < n.order(); ++y)
        if (lhs[y] != action[x][action[s][y]])
          throw Error(ErrorKind::NotHomomorphism,
                      "action of " + std::to_string(x) + "*" + std::to_string(s) + " is not the composite");
    }
  const std::size_t nn = n.order(), nh = h.order(), order = nn * nh;
  if (order > limits.order_cap || order > limits.table_threshold)
    throw Error(ErrorKind::CapExceeded, "semidirect product of order " + std::to_string(order) +
                                            " exceeds the table limit");
  return from_function(
      order,
      [&](std::size_t x, std::size_t y) {
        const auto n1 = static_cast<Elem>(x / nh), h1 = static_cast<Elem>(x % nh);
        const auto n2 = static_cast<Elem>(y / nh), h2 = static_cast<Elem>(y % nh);
        return n.multiply(n1, action[h1][n2]) * nh + h.multiply(h1, h2);
      },
      limits);
}

Action extend_action(const FiniteGroup& n, const FiniteGroup& h,
                     const std::vector<std::pair<Elem, Automorphism>>& images) {
  for (const auto& [x, f] : images) {
    if (x >= h.order()) throw Error(ErrorKind::InvalidArgument, "acting element out of range");
    check_automorphism(n, f, x);
  }
  Automorphism id(n.order());
  std::iota(id.begin(), id.end(), Elem{0});
  Action action(h.order());
  std::vector<bool> known(h.order(), false);
  action[kIdentity] = id;
  known[kIdentity] = true;
  std::deque<Elem> queue{kIdentity};
  auto compose = [&](const Automorphism& outer, const Automorphism& inner) {
    Automorphism r(inner.size());
    for (std::size_t y = 0; y < inner.size(); ++y) r[y] = outer[inner[y]];
    return r;
  };
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& [s, f] : images) {
      const auto xs = h.multiply(x, s);
      auto candidate = compose(action[x], f);
      if (!known[xs]) {
        action[xs] = std::move(candidate);
        known[xs] = true;
        queue.push_back(xs);
      } else if (action[xs] != candidate) {
        throw Error(ErrorKind::NotHomomorphism,
                    "element " + std::to_string(xs) + " receives two different automorphisms");
      }
    }
  }
  for (Elem x = 0; x < h.order(); ++x)
    if (!known[x]) throw Error(ErrorKind::InvalidArgument, "acting elements do not generate the group");
  return action;
}

}  // namespace lienil
