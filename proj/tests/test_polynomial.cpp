#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrlace/errors.hpp"
#include "ehrlace/polynomial.hpp"

using namespace ehrlace;

TEST_CASE("construction trims trailing zeros") {
  Polynomial p({Rational(1), Rational(2), Rational(0)});
  CHECK(p.degree() == 1);
  CHECK(Polynomial(Rational(0)).is_zero());
  CHECK(Polynomial().degree() == -1);
}

TEST_CASE("arithmetic") {
  Polynomial x = Polynomial::x();
  Polynomial p = (x + Polynomial(1)) * (x - Polynomial(1));
  CHECK(p == Polynomial({Rational(-1), Rational(0), Rational(1)}));
  CHECK(p + Polynomial(1) == x * x);
  CHECK(-p == Polynomial({Rational(1), Rational(0), Rational(-1)}));
  CHECK(p * Rational(1, 2) == Polynomial({Rational(-1, 2), Rational(0), Rational(1, 2)}));
}

TEST_CASE("evaluation is exact") {
  Polynomial p({Rational(1), Rational(2), Rational(2)});  // 2x^2 + 2x + 1
  CHECK(p(Rational(2)) == Rational(13));
  CHECK(p(Rational(-1, 2)) == Rational(1, 2));
}

TEST_CASE("shift and argument scaling") {
  Polynomial p({Rational(1), Rational(2), Rational(2)});
  CHECK(p.shifted(Rational(-1, 2)) == Polynomial({Rational(1, 2), Rational(0), Rational(2)}));
  CHECK(p.scaled_arg(Rational(-1)) == Polynomial({Rational(1), Rational(-2), Rational(2)}));
  Polynomial q({Rational(0), Rational(0), Rational(1)});
  CHECK(q.shifted(Rational(1)) == Polynomial({Rational(1), Rational(2), Rational(1)}));
}

TEST_CASE("derivative") {
  Polynomial p({Rational(5), Rational(3), Rational(0), Rational(1)});
  CHECK(p.derivative() == Polynomial({Rational(3), Rational(0), Rational(3)}));
  CHECK(Polynomial(7).derivative().is_zero());
}

TEST_CASE("divmod and exact division") {
  Polynomial x = Polynomial::x();
  Polynomial num = x * x * x - Polynomial(1);
  Polynomial den = x - Polynomial(1);
  auto [q, r] = num.divmod(den);
  CHECK(r.is_zero());
  CHECK(q == x * x + x + Polynomial(1));
  CHECK(num.exact_div(den) == q);
  CHECK_THROWS_AS((x * x + Polynomial(1)).exact_div(den), DivisionError);
}

TEST_CASE("gcd is monic") {
  Polynomial x = Polynomial::x();
  Polynomial a = (x - Polynomial(1)) * (x - Polynomial(2)) * Rational(3);
  Polynomial b = (x - Polynomial(2)) * (x + Polynomial(5)) * Rational(7);
  CHECK(Polynomial::gcd(a, b) == x - Polynomial(2));
  CHECK(Polynomial::gcd(a, Polynomial()) == a.monic());
  CHECK_THROWS_AS(Polynomial::gcd(Polynomial(), Polynomial()), DegenerateInput);
}

TEST_CASE("pow and monomial") {
  CHECK(Polynomial({Rational(1), Rational(1)}).pow(2) ==
        Polynomial({Rational(1), Rational(2), Rational(1)}));
  CHECK(Polynomial::monomial(3, Rational(2)) ==
        Polynomial({Rational(0), Rational(0), Rational(0), Rational(2)}));
}

TEST_CASE("printing") {
  Polynomial p({Rational(1), Rational(-1, 2), Rational(2)});
  CHECK(p.str().find("x^2") != std::string::npos);
  CHECK(p.str("t").find("t^2") != std::string::npos);
}
