#include <sstream>

#include "doctest.h"
#include "lienil/catalog.hpp"
#include "lienil/subgroup.hpp"

using namespace lienil;

namespace {

std::vector<CatalogEntry> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in);
}

template <typename F>
Error error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an Error");
  return Error(ErrorKind::Internal, "");
}

}  // namespace

TEST_CASE("shipped catalog builds") {
  const auto entries = load_catalog(LIENIL_CATALOG);
  CHECK(entries.size() >= 40);
  GroupBuilder builder(entries);
  for (const auto& e : entries) {
    const auto g = builder.build(e.name);
    CHECK(g->order() >= 1);
    if (g->order() <= 64) CHECK(verify_group_axioms(*g));
  }
  CHECK(builder.build("C2wrC4")->order() == 64);
  CHECK(builder.build("C5wrC5")->order() == 15625);
}

TEST_CASE("comments, blank lines and every kind") {
  const auto entries = parse(R"(# comment

{"name": "T", "kind": "table", "table": [[0, 1], [1, 0]]}
{"name": "P", "kind": "permutations", "degree": 3, "generators": [[1, 2, 0]]}
{"name": "C", "kind": "cyclic", "order": 4}
{"name": "D", "kind": "dihedral", "order": 8}
{"name": "Q", "kind": "quaternion8"}
{"name": "E", "kind": "extraspecial", "p": 3}
{"name": "W", "kind": "wreath_cyclic", "p": 2, "q": 4}
{"name": "X", "kind": "direct_product", "factors": ["T", "C", "D"]}
{"name": "S", "kind": "semidirect", "parts": ["C", "T"], "action": [[1, [0, 3, 2, 1]]]}
)");
  REQUIRE(entries.size() == 9);
  CHECK(entries[0].line == 3);
  GroupBuilder b(entries);
  const std::map<std::string, std::size_t> orders{{"T", 2}, {"P", 3},  {"C", 4},  {"D", 8}, {"Q", 8},
                                                  {"E", 27}, {"W", 64}, {"X", 64}, {"S", 8}};
  for (const auto& [name, order] : orders) CHECK(b.build(name)->order() == order);
  CHECK(nilpotency_class(*b.build("S")) == 2);
}

TEST_CASE("parse errors carry the line") {
  const auto e = error_of([] { parse("{\"name\": \"A\", \"kind\": \"cyclic\", \"order\": 2}\n{not json"); });
  CHECK(e.kind() == ErrorKind::ParseError);
  CHECK(std::string(e.what()).find("line 2") != std::string::npos);

  CHECK(error_of([] { parse(R"({"name": "A", "kind": "cyclic"})"); }).kind() == ErrorKind::ParseError);
  CHECK(error_of([] { parse(R"({"name": "A", "kind": "cyclic", "order": "two"})"); }).kind() ==
        ErrorKind::ParseError);
  CHECK(error_of([] { parse(R"([1, 2])"); }).kind() == ErrorKind::ParseError);
  CHECK(error_of([] {
          parse("{\"name\": \"A\", \"kind\": \"cyclic\", \"order\": 2}\n{\"name\": \"A\", \"kind\": \"quaternion8\"}");
        }).kind() == ErrorKind::ParseError);
}

TEST_CASE("unknown kinds and references") {
  CHECK(error_of([] { parse(R"({"name": "A", "kind": "sporadic"})"); }).kind() == ErrorKind::UnknownConstruction);
  CHECK(error_of([] { parse(R"({"name": "A", "kind": "direct_product", "factors": ["B"]})"); }).kind() ==
        ErrorKind::UnresolvedReference);
  const auto cyclic = error_of([] {
    parse(R"({"name": "A", "kind": "direct_product", "factors": ["B"]}
{"name": "B", "kind": "direct_product", "factors": ["A"]})");
  });
  CHECK(cyclic.kind() == ErrorKind::UnresolvedReference);

  GroupBuilder b(parse(R"({"name": "C", "kind": "cyclic", "order": 3})"));
  CHECK(error_of([&] { b.build("nope"); }).kind() == ErrorKind::UnresolvedReference);
}

TEST_CASE("inline entries may reference the catalog") {
  GroupBuilder b(load_catalog(LIENIL_CATALOG));
  const auto e = parse_entry(R"({"name": "D8xC3", "kind": "direct_product", "factors": ["D8", "C3"]})");
  CHECK(b.build(e)->order() == 24);
}

TEST_CASE("construction errors surface from the builder") {
  GroupBuilder b(parse(R"({"name": "E2", "kind": "extraspecial", "p": 2}
{"name": "Bad", "kind": "table", "table": [[0, 0], [0, 0]]}
{"name": "C4", "kind": "cyclic", "order": 4}
{"name": "C2", "kind": "cyclic", "order": 2}
{"name": "NotAut", "kind": "semidirect", "parts": ["C4", "C2"], "action": [[1, [0, 2, 1, 3]]]})"));
  CHECK(error_of([&] { b.build("E2"); }).kind() == ErrorKind::InvalidArgument);
  CHECK(error_of([&] { b.build("Bad"); }).kind() == ErrorKind::NoIdentity);
  CHECK(error_of([&] { b.build("NotAut"); }).kind() == ErrorKind::NotAutomorphism);

  Limits limits;
  limits.order_cap = 32;
  GroupBuilder capped(parse(R"({"name": "W", "kind": "wreath_cyclic", "p": 2, "q": 4})"), limits);
  CHECK(error_of([&] { capped.build("W"); }).kind() == ErrorKind::CapExceeded);
}
