#pragma once

#include <vector>

#include "ehrlace/polynomial.hpp"

namespace ehrlace {

// Rational series numerator over (1 - t)^(dim + 1): represents
// HS(t) = (sum delta[i] t^i) / (1 - t)^(dim + 1). delta is stored trimmed
// but compared padded to length dim + 1; entries may be any rationals
// (series manipulated along the way need not be Ehrhart series themselves).
struct EhrhartData {
  std::vector<Rational> delta;
  int dim = 0;

  Rational delta_at(size_t i) const {
    return i < delta.size() ? delta[i] : Rational(0);
  }
  Polynomial numerator() const { return Polynomial(delta); }
};

// H(s) = sum delta_i * C(s + d - i, d), the degree-d polynomial whose values
// are the series coefficients.
Polynomial delta_to_polynomial(const EhrhartData& e);

// Inverse transform: expands (sum_s h(s) t^s) * (1 - t)^(d + 1) and truncates.
// Throws NotPolynomialEhrhartForm if a coefficient beyond t^d survives.
EhrhartData polynomial_to_delta(const Polynomial& h);

// Coefficient of t^k in the power-series expansion.
Rational series_coefficient(const EhrhartData& e, unsigned k);

// delta_j == delta_{d-j} for all j, padded to length d + 1.
bool is_palindromic(const EhrhartData& e);

struct ReflexivityChecks {
  bool palindromic;    // (b) of the equivalence
  bool functional_eq;  // (c): H(m) == (-1)^d H(-m-1)
  bool coeff_relation; // (d): d * a_d == 2 * a_{d-1}
  bool all() const { return palindromic && functional_eq && coeff_relation; }
};

// Evaluates the three reflexivity-equivalent conditions independently.
// Requires deg h >= 1.
ReflexivityChecks reflexivity_checks(const Polynomial& h);

// Multiplies the numerator by (1 + t) and raises the dimension by one
// (the series effect of hanging a degree-one vertex onto the graph).
EhrhartData extend_by_degree_one_vertex(const EhrhartData& e);

}  // namespace ehrlace
