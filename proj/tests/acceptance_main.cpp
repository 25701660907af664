// Acceptance gate: one PASS/FAIL/SKIP line per criterion, nonzero exit on any failure.

#include <iostream>

#include "lienil/acceptance.hpp"

int main(int argc, char** argv) {
  lienil::AcceptanceOptions options;
  options.catalog = argc > 1 ? argv[1] : LIENIL_CATALOG;
  const auto results = lienil::run_acceptance(options, &std::cout);
  const bool ok = lienil::all_passed(results);
  std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << "\n";
  return ok ? 0 : 1;
}
