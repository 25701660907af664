#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lienil/constructions.hpp"
#include "lienil/group.hpp"

namespace lienil {

namespace construction {

struct Table {
  std::vector<std::vector<Elem>> table;
};
struct Permutations {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};
struct Cyclic {
  std::size_t order = 0;
};
struct Dihedral {
  std::size_t order = 0;
};
struct Quaternion8 {};
struct Extraspecial {
  unsigned p = 0;
};
struct DirectProduct {
  std::vector<std::string> factors;
};
struct WreathCyclic {
  std::size_t p = 0;
  std::size_t q = 0;
};
// parts = [normal, acting]; action pairs an acting element with the images
// of every element of the normal part.
struct Semidirect {
  std::string normal;
  std::string acting;
  std::vector<std::pair<Elem, Automorphism>> action;
};

}  // namespace construction

using Construction =
    std::variant<construction::Table, construction::Permutations, construction::Cyclic, construction::Dihedral,
                 construction::Quaternion8, construction::Extraspecial, construction::DirectProduct,
                 construction::WreathCyclic, construction::Semidirect>;

struct CatalogEntry {
  std::string name;
  Construction construction;
  std::size_t line = 0;
};

// One JSON object per line; blank lines and lines starting with '#' are
// ignored. Throws ParseError (with the line number), UnknownConstruction or
// UnresolvedReference.
std::vector<CatalogEntry> parse_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);
CatalogEntry parse_entry(const std::string& text, std::size_t line = 0);

// Resolves references between entries and memoises built groups. Groups are
// held by shared_ptr so their addresses stay stable for Subgroups.
class GroupBuilder {
 public:
  explicit GroupBuilder(std::vector<CatalogEntry> entries, Limits limits = {});

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  std::shared_ptr<const FiniteGroup> build(const std::string& name);
  std::shared_ptr<const FiniteGroup> build(const CatalogEntry& entry);

 private:
  std::shared_ptr<const FiniteGroup> build_entry(const CatalogEntry& entry, std::vector<std::string>& stack);
  std::shared_ptr<const FiniteGroup> resolve(const std::string& name, std::vector<std::string>& stack);

  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t> by_name_;
  std::map<std::string, std::shared_ptr<const FiniteGroup>> cache_;
  Limits limits_;
};

}  // namespace lienil
