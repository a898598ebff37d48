#include <cstdio>

#include "gkm/checks/acceptance.hpp"

int main() {
  const auto rows = gkm::checks::run_acceptance();
  for (const auto& r : rows) {
    std::printf("[%s] %d %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str());
    std::printf("       expected: %s\n", r.expected.c_str());
    std::printf("       computed: %s (%.2f s)\n", r.computed.c_str(), r.seconds);
  }
  return gkm::checks::all_passed(rows) ? 0 : 1;
}
