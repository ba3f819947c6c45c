#include "ehrlace/polynomial.hpp"

#include <sstream>

#include "ehrlace/errors.hpp"

namespace ehrlace {

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(unsigned deg, const Rational& c) {
  if (c == 0) return {};
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = c;
  return Polynomial(std::move(v));
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw DegenerateInput("leading coefficient of zero polynomial");
  return c_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (s == 0) return {};
  Polynomial r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Polynomial Polynomial::operator/(const Rational& s) const {
  if (s == 0) throw DivisionError("division of polynomial by zero scalar");
  return *this * (Rational(1) / s);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted(const Rational& c) const {
  // Horner in (x + c).
  Polynomial r;
  Polynomial lin({c, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Polynomial(*it);
  return r;
}

Polynomial Polynomial::scaled_arg(const Rational& c) const {
  Polynomial r = *this;
  Rational p = 1;
  for (size_t i = 0; i < r.c_.size(); ++i) {
    r.c_[i] *= p;
    p *= c;
  }
  r.trim();
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(Rational(1)), b = *this;
  for (unsigned i = e; i > 0; i >>= 1) {
    if (i & 1) r *= b;
    if (i > 1) b *= b;
  }
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw DivisionError("polynomial division by zero");
  Polynomial q, r = *this;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    Rational f = r.leading() / d.leading();
    unsigned k = static_cast<unsigned>(r.degree() - d.degree());
    Polynomial t = monomial(k, f);
    q += t;
    r -= t * d;
  }
  return {q, r};
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw DivisionError("nonzero remainder in exact division");
  return q;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw DegenerateInput("gcd(0, 0)");
  Polynomial u = a, v = b;
  while (!v.is_zero()) {
    auto [q, r] = u.divmod(v);
    (void)q;
    u = v;
    v = r;
  }
  return u.monic();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this / leading();
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeff(i);
    if (c == 0) continue;
    Rational a = c;
    if (!first) {
      os << (c > 0 ? " + " : " - ");
      if (c < 0) a = -c;
    }
    first = false;
    bool unit = (a == 1 && i > 0);
    if (!unit) os << to_string(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace ehrlace
