#pragma once

#include <complex>
#include <vector>

#include "ehrlace/errors.hpp"
#include "ehrlace/polynomial.hpp"

namespace ehrlace {

// Carries the best iterate reached when the iteration fails to settle.
struct RootConvergenceError : ConvergenceError {
  RootConvergenceError(const std::string& w, std::vector<std::complex<double>> it)
      : ConvergenceError(w), best_iterate(std::move(it)) {}
  std::vector<std::complex<double>> best_iterate;
};

// All complex roots (with multiplicity) of a polynomial of degree >= 1,
// by Aberth simultaneous iteration in double precision. Deterministic:
// fixed initial configuration on a circle of the Cauchy radius and fixed
// iteration order. Throws ConvergenceError after max_iterations.
std::vector<std::complex<double>> numeric_roots(const Polynomial& p,
                                                double tol = 1e-12,
                                                int max_iterations = 200);

}  // namespace ehrlace
