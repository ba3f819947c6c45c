#pragma once

#include <string>

#include "ehrlace/polynomial.hpp"

namespace ehrlace {

// Ratio of two exact-coefficient polynomials in a formal parameter.
// Stored gcd-reduced with a monic denominator, so equality is plain
// member equality (and always agrees with cross-multiplication).
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  // Evaluate at a rational point; the denominator must not vanish there.
  Rational operator()(const Rational& x) const;

  std::string str(const std::string& var = "n") const;

private:
  void reduce();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace ehrlace
