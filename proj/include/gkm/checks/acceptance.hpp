#pragma once

// The reproduction suite: every claim the toolkit is expected to certify,
// each reported as expected vs computed.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gkm/catalog.hpp"

namespace gkm::checks {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string expected;
  std::string computed;
  bool passed = false;
  double seconds = 0;
};

using CatalogProvider = std::function<CatalogEntry(std::string_view)>;

// Runs all criteria against the graphs returned by `provider` (the builtin
// catalog by default; tests substitute corrupted graphs).
std::vector<CriterionResult> run_acceptance(const CatalogProvider& provider = catalog);

bool all_passed(const std::vector<CriterionResult>& rows);

// Random property suites; each returns the number of failing samples.
struct PropertyCounts {
  std::size_t samples = 0;
  std::size_t failures = 0;
};
PropertyCounts smith_form_property(std::size_t samples, unsigned long seed);
PropertyCounts annihilator_property(std::size_t samples, unsigned long seed);
PropertyCounts divisibility_property(std::size_t samples, unsigned long seed);
PropertyCounts cycle_closure_property(const CatalogProvider& provider);

}  // namespace gkm::checks
