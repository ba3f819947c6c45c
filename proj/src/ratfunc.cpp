#include "ehrlace/ratfunc.hpp"

#include "ehrlace/errors.hpp"

namespace ehrlace {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionError("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Rational lead = den_.leading();
  num_ = num_ / lead;
  den_ = den_ / lead;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw DivisionError("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

Rational RationalFunction::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) throw PoleError("rational function pole at " + to_string(x));
  return num_(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_ == Polynomial(Rational(1))) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace ehrlace
