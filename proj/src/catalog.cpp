#include "lienil/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "json.hpp"

namespace lienil {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

template <typename T>
T field(const json& j, const char* key, std::size_t line) {
  if (!j.contains(key)) parse_fail(line, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    parse_fail(line, std::string("field '") + key + "': " + e.what());
  }
}

std::vector<std::string> references(const Construction& c) {
  if (auto dp = std::get_if<construction::DirectProduct>(&c)) return dp->factors;
  if (auto sd = std::get_if<construction::Semidirect>(&c)) return {sd->normal, sd->acting};
  return {};
}

}  // namespace

CatalogEntry parse_entry(const std::string& text, std::size_t line) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(line, e.what());
  }
  if (!j.is_object()) parse_fail(line, "entry is not an object");
  CatalogEntry entry;
  entry.line = line;
  entry.name = field<std::string>(j, "name", line);
  const auto kind = field<std::string>(j, "kind", line);
  namespace c = construction;
  if (kind == "table") {
    entry.construction = c::Table{field<std::vector<std::vector<Elem>>>(j, "table", line)};
  } else if (kind == "permutations") {
    entry.construction =
        c::Permutations{field<std::size_t>(j, "degree", line), field<std::vector<Permutation>>(j, "generators", line)};
  } else if (kind == "cyclic") {
    entry.construction = c::Cyclic{field<std::size_t>(j, "order", line)};
  } else if (kind == "dihedral") {
    entry.construction = c::Dihedral{field<std::size_t>(j, "order", line)};
  } else if (kind == "quaternion8") {
    entry.construction = c::Quaternion8{};
  } else if (kind == "extraspecial") {
    entry.construction = c::Extraspecial{field<unsigned>(j, "p", line)};
  } else if (kind == "direct_product") {
    auto factors = field<std::vector<std::string>>(j, "factors", line);
    if (factors.empty()) parse_fail(line, "direct_product needs at least one factor");
    entry.construction = c::DirectProduct{std::move(factors)};
  } else if (kind == "wreath_cyclic") {
    entry.construction = c::WreathCyclic{field<std::size_t>(j, "p", line), field<std::size_t>(j, "q", line)};
  } else if (kind == "semidirect") {
    auto parts = field<std::vector<std::string>>(j, "parts", line);
    if (parts.size() != 2) parse_fail(line, "semidirect needs parts [normal, acting]");
    auto action = field<std::vector<std::pair<Elem, Automorphism>>>(j, "action", line);
    entry.construction = c::Semidirect{parts[0], parts[1], std::move(action)};
  } else {
    throw Error(ErrorKind::UnknownConstruction, "line " + std::to_string(line) + ": kind '" + kind + "'");
  }
  return entry;
}

std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> entries;
  std::map<std::string, std::size_t> by_name;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    auto entry = parse_entry(text, line);
    if (!by_name.emplace(entry.name, entries.size()).second)
      parse_fail(line, "duplicate name '" + entry.name + "'");
    entries.push_back(std::move(entry));
  }

  // References must resolve and form no cycle.
  enum class Mark { None, Active, Done };
  std::vector<Mark> mark(entries.size(), Mark::None);
  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (mark[i] == Mark::Done) return;
    if (mark[i] == Mark::Active)
      throw Error(ErrorKind::UnresolvedReference, "cyclic reference through '" + entries[i].name + "'");
    mark[i] = Mark::Active;
    for (const auto& ref : references(entries[i].construction)) {
      auto it = by_name.find(ref);
      if (it == by_name.end())
        throw Error(ErrorKind::UnresolvedReference,
                    "line " + std::to_string(entries[i].line) + ": unknown group '" + ref + "'");
      self(self, it->second);
    }
    mark[i] = Mark::Done;
  };
  for (std::size_t i = 0; i < entries.size(); ++i) visit(visit, i);
  return entries;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open catalog " + path.string());
  return parse_catalog(in);
}

GroupBuilder::GroupBuilder(std::vector<CatalogEntry> entries, Limits limits)
    : entries_(std::move(entries)), limits_(limits) {
  for (std::size_t i = 0; i < entries_.size(); ++i) by_name_.emplace(entries_[i].name, i);
}

std::shared_ptr<const FiniteGroup> GroupBuilder::build(const std::string& name) {
  std::vector<std::string> stack;
  return resolve(name, stack);
}

std::shared_ptr<const FiniteGroup> GroupBuilder::build(const CatalogEntry& entry) {
  std::vector<std::string> stack;
  return build_entry(entry, stack);
}

std::shared_ptr<const FiniteGroup> GroupBuilder::resolve(const std::string& name, std::vector<std::string>& stack) {
  if (auto it = cache_.find(name); it != cache_.end()) return it->second;
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw Error(ErrorKind::UnresolvedReference, "unknown group '" + name + "'");
  if (std::find(stack.begin(), stack.end(), name) != stack.end())
    throw Error(ErrorKind::UnresolvedReference, "cyclic reference through '" + name + "'");
  stack.push_back(name);
  auto g = build_entry(entries_[it->second], stack);
  stack.pop_back();
  cache_.emplace(name, g);
  return g;
}

std::shared_ptr<const FiniteGroup> GroupBuilder::build_entry(const CatalogEntry& entry,
                                                             std::vector<std::string>& stack) {
  namespace c = construction;
  const auto& lim = limits_;
  auto make = [](FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); };
  return std::visit(
      [&](const auto& item) -> std::shared_ptr<const FiniteGroup> {
        using T = std::decay_t<decltype(item)>;
        if constexpr (std::is_same_v<T, c::Table>) {
          return make(FiniteGroup::from_table(item.table, lim));
        } else if constexpr (std::is_same_v<T, c::Permutations>) {
          return make(FiniteGroup::from_permutations(item.degree, item.generators, lim));
        } else if constexpr (std::is_same_v<T, c::Cyclic>) {
          return make(cyclic_group(item.order, lim));
        } else if constexpr (std::is_same_v<T, c::Dihedral>) {
          return make(dihedral_group(item.order, lim));
        } else if constexpr (std::is_same_v<T, c::Quaternion8>) {
          return make(quaternion_group(lim));
        } else if constexpr (std::is_same_v<T, c::Extraspecial>) {
          return make(extraspecial_group(item.p, lim));
        } else if constexpr (std::is_same_v<T, c::WreathCyclic>) {
          return make(wreath_cyclic(item.p, item.q, lim));
        } else if constexpr (std::is_same_v<T, c::DirectProduct>) {
          auto acc = resolve(item.factors.front(), stack);
          for (std::size_t i = 1; i < item.factors.size(); ++i)
            acc = make(direct_product(*acc, *resolve(item.factors[i], stack), lim));
          return acc;
        } else {
          static_assert(std::is_same_v<T, c::Semidirect>);
          auto n = resolve(item.normal, stack);
          auto h = resolve(item.acting, stack);
          return make(semidirect_product(*n, *h, extend_action(*n, *h, item.action), lim));
        }
      },
      entry.construction);
}

}  // namespace lienil
