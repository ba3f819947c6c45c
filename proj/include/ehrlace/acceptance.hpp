#pragma once

#include <string>
#include <vector>

#include "ehrlace/polynomial.hpp"

namespace ehrlace {

struct CriterionResult {
  int index;
  std::string name;
  bool pass;
  double ms;
};

// The twelve-criterion battery behind `ehrlace seed-suite`. Criteria are
// independent; a throwing criterion is reported as a failure, not an abort.
std::vector<CriterionResult> run_acceptance_suite();

// Paper-literal polynomials used by the battery and by the CLI.
Polynomial h33_polynomial();       // H_{3,3}
Polynomial h331_polynomial();      // H_{3,3,1}
Polynomial eight_cycle_polynomial();

}  // namespace ehrlace
