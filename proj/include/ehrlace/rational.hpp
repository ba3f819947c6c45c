#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "ehrlace/errors.hpp"

namespace ehrlace {

// GMP-backed exact integers and rationals. mpq_rational keeps values
// reduced with a positive denominator, which is exactly the canonical
// form we serialize ("p/q", or "p" when q = 1).
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const BigInt& z) { return z.sign(); }

inline Rational rat(long p, long q = 1) { return Rational(p, q); }

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// C(n, k) for integer n (possibly negative) and k >= 0.
inline BigInt binomial(const BigInt& n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
  }
  return r / factorial(k);
}

inline BigInt binomial(long n, unsigned k) { return binomial(BigInt(n), k); }

// Serialization fixed library-wide: "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt p(s.substr(0, slash));
    BigInt q(s.substr(slash + 1));
    if (q == 0) throw ParamError("zero denominator in rational: " + s);
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw ParamError("cannot parse rational: " + s);
  }
}

// Rounds toward negative infinity.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Rational pow(const Rational& base, unsigned e) {
  Rational r = 1, b = base;
  for (unsigned i = e; i > 0; i >>= 1) {
    if (i & 1) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace ehrlace
