#include "ehrlace/series.hpp"

#include "ehrlace/errors.hpp"

namespace ehrlace {

namespace {

// C(x + a, d) as a polynomial in x: prod_{u=0}^{d-1} (x + a - u) / d!
Polynomial binomial_poly(const Rational& a, unsigned d) {
  Polynomial p(Rational(1));
  for (unsigned u = 0; u < d; ++u)
    p *= Polynomial({a - static_cast<long>(u), Rational(1)});
  return p / Rational(factorial(d));
}

}  // namespace

Polynomial delta_to_polynomial(const EhrhartData& e) {
  const unsigned d = static_cast<unsigned>(e.dim);
  Polynomial h;
  for (size_t i = 0; i < e.delta.size(); ++i) {
    if (e.delta[i] == 0) continue;
    h += binomial_poly(Rational(static_cast<long>(d) - static_cast<long>(i)), d) *
         e.delta[i];
  }
  return h;
}

EhrhartData polynomial_to_delta(const Polynomial& h) {
  if (h.is_zero()) throw DegenerateInput("polynomial_to_delta of zero polynomial");
  const int d = h.degree();
  // (1 - t)^(d+1) has coefficients (-1)^j C(d+1, j).
  std::vector<Rational> sign(d + 2);
  for (int j = 0; j <= d + 1; ++j) {
    Rational b(binomial(static_cast<long>(d) + 1, static_cast<unsigned>(j)));
    sign[j] = (j % 2 == 0) ? b : -b;
  }
  auto coeff = [&](int k) {
    Rational c = 0;
    for (int j = 0; j <= std::min(k, d + 1); ++j)
      c += sign[j] * h(Rational(k - j));
    return c;
  };
  EhrhartData e;
  e.dim = d;
  for (int k = 0; k <= d; ++k) e.delta.push_back(coeff(k));
  if (coeff(d + 1) != 0)
    throw NotPolynomialEhrhartForm("series numerator does not terminate at t^d");
  while (!e.delta.empty() && e.delta.back() == 0) e.delta.pop_back();
  return e;
}

Rational series_coefficient(const EhrhartData& e, unsigned k) {
  // Coefficient of t^k in numerator / (1-t)^(d+1).
  Rational c = 0;
  for (size_t i = 0; i < e.delta.size() && i <= k; ++i)
    c += e.delta[i] *
         Rational(binomial(static_cast<long>(k - i) + e.dim, static_cast<unsigned>(e.dim)));
  return c;
}

bool is_palindromic(const EhrhartData& e) {
  const size_t len = static_cast<size_t>(e.dim) + 1;
  if (e.delta.size() > len) return false;
  for (size_t j = 0; j < len; ++j)
    if (e.delta_at(j) != e.delta_at(len - 1 - j)) return false;
  return true;
}

ReflexivityChecks reflexivity_checks(const Polynomial& h) {
  const int d = h.degree();
  if (d < 1) throw ParamError("reflexivity_checks needs degree >= 1");
  ReflexivityChecks r{};
  r.palindromic = is_palindromic(polynomial_to_delta(h));
  // (c): H(m) == (-1)^d H(-m-1) as polynomials.
  Polynomial mirrored = h.scaled_arg(Rational(-1)).shifted(Rational(1));
  // mirrored(m) = h(-(m + 1)) since h(-(m+1)) = (h o (x -> -x))(m+1).
  if (d % 2 == 1) mirrored = -mirrored;
  r.functional_eq = (h == mirrored);
  r.coeff_relation =
      Rational(static_cast<long>(d)) * h.coeff(d) == Rational(2) * h.coeff(d - 1);
  return r;
}

EhrhartData extend_by_degree_one_vertex(const EhrhartData& e) {
  EhrhartData out;
  out.dim = e.dim + 1;
  Polynomial numer = e.numerator() * Polynomial({Rational(1), Rational(1)});
  out.delta = numer.coeffs();
  return out;
}

}  // namespace ehrlace
