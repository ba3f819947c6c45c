#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ehrlace/rational.hpp"

namespace ehrlace {

// Dense univariate polynomial with exact rational coefficients.
// coeff(i) is the coefficient of x^i; trailing zeros are trimmed, so the
// zero polynomial has an empty coefficient vector and degree() == -1.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational& c) { if (c != 0) c_.push_back(c); }
  Polynomial(long c) : Polynomial(Rational(c)) {}
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs)
      : c_(coeffs.begin(), coeffs.end()) { trim(); }

  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
  static Polynomial monomial(unsigned deg, const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Coefficient of x^i, zero beyond the degree.
  const Rational& coeff(size_t i) const {
    static const Rational kZero(0);
    return i < c_.size() ? c_[i] : kZero;
  }
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  Polynomial operator/(const Rational& s) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  // p(x + c)
  Polynomial shifted(const Rational& c) const;
  // p(c * x)
  Polynomial scaled_arg(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  // Quotient and remainder of division by d (d != 0).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  // Division that must be exact; throws DivisionError on nonzero remainder.
  Polynomial exact_div(const Polynomial& d) const;

  // Monic gcd; gcd(0, 0) throws DegenerateInput.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  Polynomial monic() const;

  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rational> c_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

}  // namespace ehrlace
