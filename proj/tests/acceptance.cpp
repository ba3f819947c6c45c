#include <cstdio>

#include "ehrlace/acceptance.hpp"

int main() {
  auto results = ehrlace::run_acceptance_suite();
  bool all = true;
  for (const auto& r : results) {
    std::printf("%s criterion %d: %s (%.0f ms)\n", r.pass ? "PASS" : "FAIL",
                r.index, r.name.c_str(), r.ms);
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
