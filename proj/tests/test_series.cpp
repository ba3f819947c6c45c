#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrlace/series.hpp"

using namespace ehrlace;

TEST_CASE("delta to polynomial: the path-graph quadratic") {
  EhrhartData e{{Rational(1), Rational(2), Rational(1)}, 2};
  Polynomial h = delta_to_polynomial(e);
  CHECK(h == Polynomial({Rational(1), Rational(2), Rational(2)}));
  CHECK(h(Rational(0)) == 1);
  CHECK(h(Rational(2)) == 13);
}

TEST_CASE("polynomial/delta round trip") {
  Polynomial h({Rational(1), Rational(43, 10), Rational(481, 60), Rational(33, 4),
                Rational(37, 6), Rational(49, 20), Rational(49, 60)});
  EhrhartData e = polynomial_to_delta(h);
  CHECK(e.dim == 6);
  CHECK(delta_to_polynomial(e) == h);
}

TEST_CASE("series coefficients are the polynomial values") {
  EhrhartData e{{Rational(1), Rational(2), Rational(1)}, 2};
  Polynomial h = delta_to_polynomial(e);
  for (unsigned k = 0; k <= 8; ++k)
    CHECK(series_coefficient(e, k) == h(Rational(static_cast<long>(k))));
}

TEST_CASE("palindromicity pads to dim + 1") {
  CHECK(is_palindromic({{Rational(1), Rational(2), Rational(1)}, 2}));
  CHECK(!is_palindromic({{Rational(1), Rational(2)}, 2}));
  CHECK(is_palindromic({{Rational(1), Rational(0), Rational(1)}, 2}));
}

TEST_CASE("the three reflexivity conditions agree") {
  Polynomial reflexive({Rational(1), Rational(2), Rational(2)});
  ReflexivityChecks r = reflexivity_checks(reflexive);
  CHECK(r.palindromic);
  CHECK(r.functional_eq);
  CHECK(r.coeff_relation);
  CHECK(r.all());

  // x^2 + 1: delta vector (1, -1, 2) is not palindromic and h(-m-1) != h(m).
  ReflexivityChecks bad = reflexivity_checks(Polynomial({Rational(1), Rational(0), Rational(1)}));
  CHECK(!bad.palindromic);
  CHECK(!bad.functional_eq);
}

TEST_CASE("degree-one vertex extension multiplies by 1 + t") {
  EhrhartData e{{Rational(1), Rational(2), Rational(1)}, 2};
  EhrhartData ext = extend_by_degree_one_vertex(e);
  CHECK(ext.dim == 3);
  CHECK(ext.numerator() == Polynomial({Rational(1), Rational(3), Rational(3), Rational(1)}));
  // HS_ext = HS * (1 + t) / (1 - t).
  for (unsigned k = 0; k <= 5; ++k) {
    Rational sum = series_coefficient(e, k);
    for (unsigned j = 0; j < k; ++j) sum += 2 * series_coefficient(e, j);
    CHECK(series_coefficient(ext, k) == sum);
  }
}
