// lienil: Lie nilpotency indices of modular group algebras.
//
//   lienil analyze <group> [--prime p] [--json] [--oracle | --no-oracle]
//   lienil scan --prime p [--max-order N] [--json]
//   lienil selftest
//
// Exit codes: 0 ok, 1 usage, 2 group build error, 3 consistency failure.

#include <iomanip>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "lienil/acceptance.hpp"
#include "lienil/catalog.hpp"
#include "lienil/report.hpp"

#ifndef LIENIL_DEFAULT_CATALOG
#define LIENIL_DEFAULT_CATALOG "catalog/groups.jsonl"
#endif

namespace {

using namespace lienil;

constexpr int kBuildError = 2;
constexpr int kConsistencyError = 3;

struct Common {
  std::string catalog = LIENIL_DEFAULT_CATALOG;
  std::size_t cap = Limits{}.order_cap;
  std::size_t oracle_cap = OracleOptions{}.oracle_cap;
  bool force_oracle = false;
  bool no_oracle = false;
  bool json = false;
  bool timing = false;
  bool serial = false;

  Limits limits() const {
    Limits l;
    l.order_cap = cap;
    return l;
  }
  AnalyzeOptions analyze_options() const {
    AnalyzeOptions o;
    o.oracle = force_oracle ? OracleMode::Force : no_oracle ? OracleMode::Off : OracleMode::Auto;
    o.oracle_options.oracle_cap = oracle_cap;
    o.oracle_options.exec = serial ? Exec::Serial : Exec::Parallel;
    o.timing = timing;
    return o;
  }
};

void add_common(CLI::App* app, Common& c, bool oracle_flags) {
  app->add_option("--catalog", c.catalog, "Group catalog (JSON lines)");
  app->add_option("--cap", c.cap, "Global order cap for group constructions");
  app->add_option("--oracle-cap", c.oracle_cap, "Largest group order the algebra oracle runs on");
  if (oracle_flags) {
    auto* on = app->add_flag("--oracle", c.force_oracle, "Run the algebra oracle regardless of order");
    auto* off = app->add_flag("--no-oracle", c.no_oracle, "Never run the algebra oracle");
    on->excludes(off);
    app->add_flag("--json", c.json, "Structured output");
    app->add_flag("--timing", c.timing, "Include wall-clock timings");
    app->add_flag("--serial", c.serial, "Use the serial reference kernels");
  }
}

// Prime of the derived subgroup when it is a p-group, 2 otherwise.
unsigned infer_prime(const FiniteGroup& g) {
  const auto gamma = lower_central_series(g);
  if (gamma.size() > 1)
    for (unsigned p = 2; p <= gamma[1].order(); ++p)
      if (is_prime(p) && is_p_group(gamma[1], p)) return p;
  for (unsigned p = 2; p <= g.order(); ++p)
    if (is_prime(p) && g.order() % p == 0) return p;
  return 2;
}

int cmd_analyze(const Common& c, const std::string& group, unsigned prime) {
  std::shared_ptr<const FiniteGroup> g;
  std::string name = group;
  try {
    GroupBuilder builder(load_catalog(c.catalog), c.limits());
    if (!group.empty() && group.front() == '{') {
      auto entry = parse_entry(group);
      name = entry.name;
      g = builder.build(entry);
    } else {
      g = builder.build(group);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBuildError;
  }
  if (prime == 0) prime = infer_prime(*g);
  const auto report = analyze(*g, name, Prime(prime), c.analyze_options());
  if (c.json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
  return report.consistent() ? 0 : kConsistencyError;
}

int cmd_scan(const Common& c, unsigned prime, std::size_t max_order) {
  std::vector<CatalogEntry> entries;
  try {
    entries = load_catalog(c.catalog);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBuildError;
  }
  GroupBuilder builder(entries, c.limits());
  struct Item {
    std::string name;
    std::shared_ptr<const FiniteGroup> group;
  };
  std::vector<Item> items;
  std::vector<std::string> build_errors;
  for (const auto& e : entries) {
    try {
      auto g = builder.build(e.name);
      if (max_order == 0 || g->order() <= max_order) items.push_back({e.name, std::move(g)});
    } catch (const Error& err) {
      build_errors.push_back(e.name + ": " + err.what());
    }
  }

  std::vector<LieReport> reports(items.size());
  std::vector<std::string> errors(items.size());
  const auto options = c.analyze_options();
  const auto count = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      reports[i] = analyze(*items[i].group, items[i].name, Prime(prime), options);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  std::map<std::string, std::size_t> verdicts;
  std::size_t violations = 0, failed = 0;
  std::vector<std::string> witnesses;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (!errors[i].empty()) {
      build_errors.push_back(items[i].name + ": " + errors[i]);
      continue;
    }
    const auto& r = reports[i];
    ++verdicts[r.verdict.tag()];
    for (const auto& chk : r.checks) {
      if (chk.outcome != Outcome::Fail) continue;
      ++failed;
      if (chk.name == "three_way_biconditional") ++violations;
    }
    if (r.verdict.status == Status::AlmostMaximal && (prime == 2 || prime == 3)) witnesses.push_back(r.group);
  }

  if (c.json) {
    nlohmann::ordered_json out;
    out["prime"] = prime;
    out["max_order"] = max_order;
    nlohmann::ordered_json summary;
    summary["analyzed"] = reports.size() - std::count_if(errors.begin(), errors.end(), [](auto& e) { return !e.empty(); });
    summary["verdicts"] = verdicts;
    summary["biconditional_violations"] = violations;
    summary["failed_checks"] = failed;
    summary["sharpness_witnesses"] = witnesses;
    summary["errors"] = build_errors;
    out["summary"] = std::move(summary);
    auto rs = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < reports.size(); ++i)
      if (errors[i].empty()) rs.push_back(reports[i].to_json());
    out["reports"] = std::move(rs);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(14) << "group" << std::setw(8) << "order" << std::setw(26) << "verdict"
              << std::setw(6) << "t^L" << std::setw(16) << "oracle t^L/t_L"
              << "checks\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (!errors[i].empty()) continue;
      const auto& r = reports[i];
      std::string oracle = "-";
      if (r.oracle && !r.oracle->failure)
        oracle = std::to_string(r.oracle->t_upper) + "/" + std::to_string(r.oracle->t_lower);
      std::cout << std::left << std::setw(14) << r.group << std::setw(8) << r.order << std::setw(26)
                << r.verdict.tag() << std::setw(6)
                << (r.t_upper_jennings ? std::to_string(*r.t_upper_jennings) : "-") << std::setw(16) << oracle
                << (r.consistent() ? "ok" : "FAILED") << "\n";
    }
    std::cout << "\nanalyzed " << reports.size() << " groups at p = " << prime << "; ";
    for (const auto& [tag, n] : verdicts) std::cout << tag << ": " << n << "  ";
    std::cout << "\nbiconditional violations: " << violations << ", failed checks: " << failed << "\n";
    if (!witnesses.empty()) {
      std::cout << "sharpness witnesses:";
      for (const auto& w : witnesses) std::cout << " " << w;
      std::cout << "\n";
    }
    for (const auto& e : build_errors) std::cout << "error: " << e << "\n";
  }
  if (!build_errors.empty()) return kBuildError;
  return failed == 0 ? 0 : kConsistencyError;
}

int cmd_selftest(const Common& c) {
  AcceptanceOptions options;
  options.catalog = c.catalog;
  options.limits = c.limits();
  options.oracle.oracle_cap = c.oracle_cap;
  const auto results = run_acceptance(options, &std::cout);
  const bool ok = all_passed(results);
  std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? 0 : kConsistencyError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie nilpotency indices of modular group algebras"};
  app.require_subcommand(1);

  Common analyze_opts, scan_opts, self_opts;
  std::string group;
  unsigned analyze_prime = 0, scan_prime = 0;
  std::size_t max_order = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyse one group");
  analyze_cmd->add_option("group", group, "Catalog name or an inline JSON entry")->required();
  analyze_cmd->add_option("--prime,-p", analyze_prime, "Field characteristic (default: prime of G')");
  add_common(analyze_cmd, analyze_opts, true);

  auto* scan_cmd = app.add_subcommand("scan", "Analyse every catalog group");
  scan_cmd->add_option("--prime,-p", scan_prime, "Field characteristic")->required();
  scan_cmd->add_option("--max-order", max_order, "Skip groups larger than this (0: no limit)");
  add_common(scan_cmd, scan_opts, true);

  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  add_common(self_cmd, self_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_opts, group, analyze_prime);
    if (*scan_cmd) {
      static_cast<void>(Prime(scan_prime));
      return cmd_scan(scan_opts, scan_prime, max_order);
    }
    if (*self_cmd) return cmd_selftest(self_opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? 1 : kConsistencyError;
  }
  return 1;
}
