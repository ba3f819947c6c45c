#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrlace/errors.hpp"
#include "ehrlace/ratfunc.hpp"

using namespace ehrlace;

namespace {
const Polynomial n = Polynomial::x();
}

TEST_CASE("reduction to lowest terms with monic denominator") {
  RationalFunction r(n * n - Polynomial(1), (n - Polynomial(1)) * Rational(2));
  CHECK(r.num() == (n + Polynomial(1)) * Rational(1, 2));
  CHECK(r.den() == Polynomial(Rational(1)));
  RationalFunction s((n + Polynomial(2)) * Rational(3), (n + Polynomial(1)) * Rational(6));
  CHECK(s.den() == n + Polynomial(1));
}

TEST_CASE("field arithmetic") {
  RationalFunction a(Polynomial(Rational(1)), n);                  // 1/n
  RationalFunction b(Polynomial(Rational(1)), n + Polynomial(1));  // 1/(n+1)
  RationalFunction diff = a - b;
  CHECK(diff == RationalFunction(Polynomial(Rational(1)), n * (n + Polynomial(1))));
  CHECK(a * b == RationalFunction(Polynomial(Rational(1)), n * n + n));
  CHECK(a / b == RationalFunction(n + Polynomial(1), n));
  CHECK((a - a).is_zero());
  CHECK(-a + a == RationalFunction());
}

TEST_CASE("equality is canonical-form equality") {
  RationalFunction a(n * Rational(2), n * n * Rational(4));
  RationalFunction b(Polynomial(Rational(1)), n * Rational(2));
  CHECK(a == b);
}

TEST_CASE("evaluation and poles") {
  RationalFunction r(n + Polynomial(1), n - Polynomial(2));
  CHECK(r(Rational(3)) == Rational(4));
  CHECK_THROWS_AS(r(Rational(2)), PoleError);
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(RationalFunction(n, Polynomial()), DivisionError);
  RationalFunction a(n, n + Polynomial(1));
  CHECK_THROWS_AS(a / RationalFunction(), DivisionError);
}

TEST_CASE("printing uses the requested variable") {
  RationalFunction r(n * Rational(3) + Polynomial(1), n + Polynomial(2));
  CHECK(r.str().find('n') != std::string::npos);
}
