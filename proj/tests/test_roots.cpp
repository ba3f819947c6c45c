#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ehrlace/roots.hpp"

using namespace ehrlace;

TEST_CASE("real roots of a cubic") {
  Polynomial p(Rational(1));
  for (long r : {1, 2, 3}) p *= Polynomial({Rational(-r), Rational(1)});
  auto roots = numeric_roots(p);
  REQUIRE(roots.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(roots[i].real() - static_cast<double>(i + 1)) < 1e-9);
    CHECK(std::abs(roots[i].imag()) < 1e-9);
  }
}

TEST_CASE("conjugate pair") {
  Polynomial p({Rational(1), Rational(0), Rational(1)});
  auto roots = numeric_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0].real()) < 1e-9);
  CHECK(std::abs(roots[0].imag() + 1.0) < 1e-9);
  CHECK(std::abs(roots[1].imag() - 1.0) < 1e-9);
}

TEST_CASE("output is deterministic and sorted") {
  Polynomial p({Rational(-6), Rational(11), Rational(-6), Rational(1)});
  auto a = numeric_roots(p);
  auto b = numeric_roots(p);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    if (i > 0) CHECK(a[i - 1].real() <= a[i].real() + 1e-12);
  }
}

TEST_CASE("double root still converges") {
  Polynomial p({Rational(1), Rational(2), Rational(1)});  // (x+1)^2
  auto roots = numeric_roots(p);
  REQUIRE(roots.size() == 2);
  for (const auto& z : roots) {
    CHECK(std::abs(z.real() + 1.0) < 1e-5);
    CHECK(std::abs(z.imag()) < 1e-5);
  }
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS(numeric_roots(Polynomial(Rational(3))));
  CHECK_THROWS(numeric_roots(Polynomial()));
}
