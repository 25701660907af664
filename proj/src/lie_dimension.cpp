#include "lienil/lie_dimension.hpp"

#include <algorithm>

namespace lienil {

Subgroup DimensionSeries::term(std::size_t k) const {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "dimension subgroups are indexed from 1");
  if (k <= terms.size()) return terms[k - 1];
  return Subgroup::trivial(terms.front().parent());
}

std::vector<std::size_t> DimensionSeries::orders() const {
  std::vector<std::size_t> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.order());
  return out;
}

bool same_terms(const DimensionSeries& a, const DimensionSeries& b) {
  return a.prime == b.prime && a.terms == b.terms;
}

unsigned DVector::at(std::size_t k) const {
  auto it = entries.find(k);
  return it == entries.end() ? 0 : it->second;
}

unsigned DVector::total() const {
  unsigned s = 0;
  for (const auto& [k, d] : entries) s += d;
  return s;
}

bool is_lie_nilpotent(const FiniteGroup& g, unsigned p) {
  auto series = lower_central_series(g);
  if (!series.back().is_trivial()) return false;
  if (series.size() < 2) return true;
  return is_p_group(series[1], p);
}

namespace {

struct Prepared {
  std::vector<Subgroup> gamma;  // gamma_1 .. gamma_{c+1} = 1
  std::size_t bound;            // D(m+1) = 1 for every m >= bound
};

Prepared prepare(const FiniteGroup& g, unsigned p) {
  auto gamma = lower_central_series(g);
  if (!gamma.back().is_trivial())
    throw Error(ErrorKind::NotLieNilpotent, "group is not nilpotent");
  if (gamma.size() >= 2 && !is_p_group(gamma[1], p))
    throw Error(ErrorKind::NotLieNilpotent,
                "derived subgroup of order " + std::to_string(gamma[1].order()) + " is not a " +
                    std::to_string(p) + "-group");
  if (gamma.size() == 1) gamma.push_back(gamma.front());  // trivial G: gamma_2 = 1 too
  const std::size_t c = gamma.size() - 1;
  const std::size_t e = gamma.size() > 1 ? exponent(gamma[1]) : 1;
  // Every nontrivial factor gamma_j^{p^i} (j >= 2) has p^i < exp(G'), so it
  // only enters for m <= (c-1) exp(G') / p.
  return {std::move(gamma), c * e + 2};
}

}  // namespace

namespace detail {

DimensionSeries series_recursive_with(const FiniteGroup& g, Prime p, Rounding rounding) {
  auto prep = prepare(g, p);
  DimensionSeries s;
  s.prime = p;
  s.route = SeriesRoute::Recursive;
  s.terms.push_back(prep.gamma[0]);
  s.terms.push_back(prep.gamma[1]);
  for (std::size_t m = 2; !s.terms.back().is_trivial(); ++m) {
    if (m > prep.bound) throw Error(ErrorKind::Internal, "dimension series failed to terminate");
    const std::size_t q = rounding == Rounding::Ceiling ? (m + p - 1) / p : m / p;
    const auto& prev = s.terms[m - 1];        // D(m)
    const auto& earlier = s.terms[q];          // D(q + 1)
    s.terms.push_back(product_of_subgroups(commutator_subgroup(prev, g), power_subgroup(earlier, p)));
  }
  return s;
}

}  // namespace detail

DimensionSeries series_recursive(const FiniteGroup& g, Prime p) {
  return detail::series_recursive_with(g, p, detail::Rounding::Ceiling);
}

DimensionSeries series_product(const FiniteGroup& g, Prime p) {
  auto prep = prepare(g, p);
  const auto& gamma = prep.gamma;

  // Factors gamma_j^{p^i} for j >= 2 with p^i <= exp(gamma_j), tagged with
  // the weight (j-1) p^i.
  struct Factor {
    std::size_t weight;
    Subgroup group;
  };
  std::vector<Factor> factors;
  for (std::size_t j = 2; j < gamma.size(); ++j) {
    if (gamma[j - 1].is_trivial()) continue;
    const auto e = exponent(gamma[j - 1]);
    for (std::uint64_t pi = 1; pi <= e; pi *= p)
      factors.push_back({(j - 1) * pi, power_subgroup(gamma[j - 1], pi)});
  }

  DimensionSeries s;
  s.prime = p;
  s.route = SeriesRoute::Product;
  s.terms.push_back(gamma[0]);
  for (std::size_t m = 1;; ++m) {
    if (m > prep.bound) throw Error(ErrorKind::Internal, "dimension series failed to terminate");
    std::vector<Elem> gens;
    for (const auto& f : factors)
      if (f.weight >= m) gens.insert(gens.end(), f.group.generators().begin(), f.group.generators().end());
    s.terms.push_back(Subgroup::generated(g, gens));
    if (s.terms.back().is_trivial()) break;
  }
  return s;
}

DVector d_vector(const DimensionSeries& s) {
  DVector d;
  d.prime = s.prime;
  const auto derived = s.term(2);
  auto n = log_p(derived.order(), s.prime);
  auto l = log_p(exponent(derived), s.prime);
  if (!n || !l) throw Error(ErrorKind::IndexNotPPower, "derived subgroup is not a p-group");
  d.n = *n;
  d.l = *l;
  for (std::size_t k = 2; k <= s.terms.size(); ++k) {
    const auto index = s.term(k).order() / s.term(k + 1).order();
    auto e = log_p(index, s.prime);
    if (!e) throw Error(ErrorKind::IndexNotPPower, "index [D(" + std::to_string(k) + "):D(" +
                                                        std::to_string(k + 1) + ")] = " + std::to_string(index));
    if (*e > 0) d.entries[k] = *e;
  }
  return d;
}

std::uint64_t upper_index_jennings(const DVector& d) {
  std::uint64_t sum = 0;
  for (const auto& [k, dk] : d.entries) sum += static_cast<std::uint64_t>(k - 1) * dk;
  return 2 + static_cast<std::uint64_t>(d.prime - 1) * sum;
}

bool verify_sum_rule(const DVector& d) { return d.total() == d.n; }

std::vector<ShalevViolation> shalev_vanishing_report(const FiniteGroup& g, Prime p) {
  const auto s = series_recursive(g, p);
  const auto d = d_vector(s);
  std::vector<ShalevViolation> out;
  std::uint64_t pl1 = 0;  // p^{l-1}, only meaningful for l >= 1
  if (d.l >= 1) {
    pl1 = 1;
    for (unsigned i = 1; i < d.l; ++i) pl1 *= p;
  }
  for (std::size_t m = 1; m <= s.terms.size(); ++m) {
    if (d.at(m + 1) != 0) continue;
    const bool power_of_p = log_p(m, p).has_value();
    const bool divisible = pl1 != 0 && m % pl1 == 0;
    if (!power_of_p && !divisible) continue;
    const auto order = s.term(m + 1).order();
    if (order != 1)
      out.push_back({m, power_of_p ? "m is a power of p" : "p^(l-1) divides m", order});
  }
  return out;
}

bool quotient_series_check(const FiniteGroup& g, Prime p, const Subgroup& h) {
  if (!is_central(h)) throw Error(ErrorKind::NotCentral, "subgroup of order " + std::to_string(h.order()));
  const auto sg = series_recursive(g, p);
  const auto q = quotient(g, h);
  const auto sq = series_recursive(q.group, p);
  const auto len = std::max(sg.terms.size(), sq.terms.size());
  for (std::size_t k = 1; k <= len; ++k)
    if (!(q.image(sg.term(k)) == sq.term(k))) return false;
  return true;
}

}  // namespace lienil
