#include "lienil/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace lienil {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skip: return "skip";
  }
  return "?";
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Check check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? Outcome::Pass : Outcome::Fail, std::move(detail)};
}

Check skipped(std::string name, std::string why) { return {std::move(name), Outcome::Skip, std::move(why)}; }

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

void run_oracle(const FiniteGroup& g, Prime p, const DimensionSeries* series, const OracleOptions& options,
                LieReport& r) {
  GroupAlgebra algebra(g, p, options);
  OracleResult o;
  if (!series) {
    try {
      upper_lie_powers(algebra);
      r.checks.push_back(check("oracle_confirms_not_lie_nilpotent", false, "upper Lie powers reached zero"));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoConvergence) throw;
      o.failure = e.what();
      r.checks.push_back(check("oracle_confirms_not_lie_nilpotent", true, e.what()));
    }
    r.oracle = std::move(o);
    return;
  }

  const auto upper = upper_lie_powers(algebra);
  const auto lower = lower_lie_powers(algebra);
  o.t_upper = upper.index;
  o.t_lower = lower.index;
  o.upper_dims = upper.dims;
  o.lower_dims = lower.dims;

  bool direct_ok = true;
  std::string direct_detail;
  for (std::size_t m = 1; m <= series->terms.size(); ++m) {
    const auto direct = dimension_subgroup_direct(algebra, upper, m);
    o.dimension_subgroup_orders.push_back(direct.order());
    if (!(direct == series->term(m))) {
      direct_ok = false;
      direct_detail = "mismatch at D(" + std::to_string(m) + ")";
    }
  }

  const auto jennings = *r.t_upper_jennings;
  const auto derived = r.gamma_series.size() > 1 ? r.gamma_series[1].order : 1;
  r.checks.push_back(check("oracle_upper_matches_jennings", o.t_upper == jennings,
                           "oracle " + std::to_string(o.t_upper) + ", Jennings " + std::to_string(jennings)));
  r.checks.push_back(check("oracle_index_bounds", o.t_lower <= o.t_upper && o.t_upper <= derived + 1,
                           "t_L=" + std::to_string(o.t_lower) + " t^L=" + std::to_string(o.t_upper) +
                               " |G'|+1=" + std::to_string(derived + 1)));
  if (p > 3)
    r.checks.push_back(check("oracle_char_gt3_equality", o.t_lower == o.t_upper));
  else
    r.checks.push_back(skipped("oracle_char_gt3_equality", "p <= 3"));
  r.checks.push_back(check("oracle_dimension_subgroups", direct_ok, direct_detail));
  r.checks.push_back(check("oracle_second_powers_agree", upper.power(2) == lower.power(2)));
  const auto strict = [](const std::vector<std::size_t>& d) {
    return std::adjacent_find(d.begin(), d.end(), [](auto a, auto b) { return b >= a; }) == d.end();
  };
  r.checks.push_back(check("oracle_monotone", strict(o.upper_dims) && strict(o.lower_dims),
                           "upper " + join(o.upper_dims) + " lower " + join(o.lower_dims)));
  r.oracle = std::move(o);
}

}  // namespace

bool LieReport::consistent() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.outcome == Outcome::Fail; });
}

LieReport analyze(const FiniteGroup& g, const std::string& name, Prime p, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  LieReport r;
  r.group = name;
  r.order = g.order();
  r.prime = p;

  const auto gamma = lower_central_series(g);
  const bool nilpotent = gamma.back().is_trivial();
  if (nilpotent) r.nilpotency_class = gamma.size() - 1;
  for (const auto& t : gamma) {
    GammaTerm term{t.order(), std::nullopt};
    if (is_abelian(t)) term.type = abelian_invariants(t);
    r.gamma_series.push_back(std::move(term));
  }
  r.lie_nilpotent = is_lie_nilpotent(g, p);

  std::optional<DimensionSeries> recursive;
  if (r.lie_nilpotent) {
    recursive = series_recursive(g, p);
    const auto product = series_product(g, p);
    r.dimension_recursive = recursive->orders();
    r.dimension_product = product.orders();
    r.d = d_vector(*recursive);
    const auto t = upper_index_jennings(r.d);
    r.t_upper_jennings = t;
    r.verdict = classify(g, p);
    r.lemma2 = lemma2_profile(r.d);

    const auto derived = ipow(p, r.d.n);
    r.checks.push_back(check("sum_rule", verify_sum_rule(r.d),
                             "sum " + std::to_string(r.d.total()) + ", n " + std::to_string(r.d.n)));
    r.checks.push_back(check("route_equivalence", same_terms(*recursive, product),
                             "recursive " + join(r.dimension_recursive) + " product " + join(r.dimension_product)));
    const auto violations = shalev_vanishing_report(g, p);
    r.checks.push_back(check("shalev_vanishing", violations.empty(),
                             violations.empty() ? "" : "first at m=" + std::to_string(violations.front().m)));
    r.checks.push_back(check("upper_bound", t <= derived + 1));
    const bool cyclic = r.gamma_series.size() > 1 && r.gamma_series[1].type &&
                        r.gamma_series[1].type->is_cyclic() && r.gamma_series[1].order > 1;
    if (cyclic)
      r.checks.push_back(check("cyclic_derived_maximal", r.verdict.status == Status::Maximal));
    else
      r.checks.push_back(skipped("cyclic_derived_maximal", "derived subgroup not cyclic and nontrivial"));
    const auto cv = cross_validate(g, p);
    r.checks.push_back(check("three_way_biconditional", cv.agree(), cv.detail));
    if (p >= 5 && r.d.n >= 1 && t < derived + 1) {
      const auto bound = ipow(p, r.d.n - 1) + 2 * p - 1;
      r.checks.push_back(check("p5_gap_bound", t <= bound, "bound " + std::to_string(bound)));
    } else {
      r.checks.push_back(skipped("p5_gap_bound", "needs p >= 5 and a non-maximal index"));
    }
    const auto bare = classify(g, p, ClassifyOptions{false});
    r.checks.push_back(check("evidence_invariance", bare.status == r.verdict.status));
  } else {
    r.verdict = classify(g, p);
  }

  const bool run = options.oracle == OracleMode::Force ||
                   (options.oracle == OracleMode::Auto && g.order() <= options.oracle_options.oracle_cap);
  if (run) {
    auto oo = options.oracle_options;
    oo.oracle_cap = std::max(oo.oracle_cap, g.order());
    run_oracle(g, p, recursive ? &*recursive : nullptr, oo, r);
  }

  if (options.timing)
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::ordered_json LieReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["group"] = group;
  j["order"] = order;
  j["prime"] = prime;
  j["lie_nilpotent"] = lie_nilpotent;
  j["nilpotency_class"] = nilpotency_class ? ordered_json(*nilpotency_class) : ordered_json(nullptr);
  auto gs = ordered_json::array();
  for (const auto& t : gamma_series) {
    ordered_json e;
    e["order"] = t.order;
    e["abelian_type"] = t.type ? ordered_json(t.type->factors) : ordered_json(nullptr);
    gs.push_back(std::move(e));
  }
  j["gamma_series"] = std::move(gs);
  ordered_json ds;
  ds["recursive"] = dimension_recursive;
  ds["product"] = dimension_product;
  j["dimension_series"] = std::move(ds);
  if (lie_nilpotent) {
    auto dv = ordered_json::array();
    for (const auto& [k, v] : d.entries) dv.push_back({k, v});
    j["d_vector"] = std::move(dv);
    j["n"] = d.n;
    j["l"] = d.l;
  } else {
    j["d_vector"] = nullptr;
    j["n"] = nullptr;
    j["l"] = nullptr;
  }
  j["t_upper_jennings"] = t_upper_jennings ? ordered_json(*t_upper_jennings) : ordered_json(nullptr);
  if (oracle) {
    ordered_json o;
    if (oracle->failure) {
      o["converged"] = false;
      o["t_upper"] = nullptr;
      o["t_lower"] = nullptr;
    } else {
      o["converged"] = true;
      o["t_upper"] = oracle->t_upper;
      o["t_lower"] = oracle->t_lower;
      o["upper_dims"] = oracle->upper_dims;
      o["lower_dims"] = oracle->lower_dims;
      o["dimension_subgroups"] = oracle->dimension_subgroup_orders;
    }
    j["oracle"] = std::move(o);
  } else {
    j["oracle"] = nullptr;
  }
  j["verdict"] = verdict.tag();
  j["structural_case"] =
      verdict.evidence ? [&]() -> ordered_json {
        auto c = structural_case_from(*verdict.evidence, prime);
        return c ? ordered_json(std::string(to_string(*c))) : ordered_json(nullptr);
      }()
                       : ordered_json(nullptr);
  j["lemma2_profile"] = lemma2 ? ordered_json(std::string(to_string(*lemma2))) : ordered_json(nullptr);
  auto cs = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["status"] = std::string(to_string(c.outcome));
    e["detail"] = c.detail;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  j["consistent"] = consistent();
  if (seconds) j["seconds"] = *seconds;
  return j;
}

std::string LieReport::to_text() const {
  std::ostringstream os;
  auto row = [&](const std::string& k, const std::string& v) { os << "  " << std::left << std::setw(40) << k << v << "\n"; };
  os << group << "  (|G| = " << order << ", p = " << prime << ")\n";
  row("lie nilpotent", lie_nilpotent ? "yes" : "no");
  row("class", nilpotency_class ? std::to_string(*nilpotency_class) : "not nilpotent");
  std::ostringstream gs;
  for (std::size_t i = 0; i < gamma_series.size(); ++i)
    gs << (i ? " > " : "") << gamma_series[i].order
       << (gamma_series[i].type && gamma_series[i].order > 1 ? gamma_series[i].type->to_string() : "");
  row("gamma series", gs.str());
  if (lie_nilpotent) {
    row("D series (recursive)", join(dimension_recursive));
    row("D series (product)", join(dimension_product));
    std::ostringstream dv;
    for (const auto& [k, v] : d.entries) dv << "d(" << k << ")=" << v << " ";
    row("d-vector", dv.str().empty() ? "(empty)" : dv.str());
    row("n, l", std::to_string(d.n) + ", " + std::to_string(d.l));
    row("t^L (Jennings)", std::to_string(*t_upper_jennings));
  }
  if (oracle) {
    if (oracle->failure) {
      row("oracle", "did not converge");
    } else {
      row("t^L (oracle)", std::to_string(oracle->t_upper) + "  dims " + join(oracle->upper_dims));
      row("t_L (oracle)", std::to_string(oracle->t_lower) + "  dims " + join(oracle->lower_dims));
    }
  }
  row("verdict", verdict.tag());
  for (const auto& c : checks)
    row("check " + c.name, std::string(to_string(c.outcome)) + (c.detail.empty() ? "" : "  " + c.detail));
  if (seconds) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << *seconds << " s";
    row("time", t.str());
  }
  return os.str();
}

}  // namespace lienil
