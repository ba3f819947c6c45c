#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrlace/errors.hpp"
#include "ehrlace/sturm.hpp"

using namespace ehrlace;

namespace {
Polynomial from_roots(std::initializer_list<long> roots) {
  Polynomial p(Rational(1));
  for (long r : roots) p *= Polynomial({Rational(-r), Rational(1)});
  return p;
}
}  // namespace

TEST_CASE("root counting over intervals") {
  Polynomial p = from_roots({1, 2, 5});
  SturmChain chain(p);
  CHECK(chain.count_all() == 3);
  CHECK(chain.count(Rational(0), Rational(3)) == 2);
  // Half-open (lo, hi]: the left endpoint is excluded, the right included.
  CHECK(chain.count(Rational(1), Rational(2)) == 1);
  CHECK(chain.count(Rational(2), Rational(5)) == 1);
  CHECK(chain.count(std::nullopt, Rational(0)) == 0);
  CHECK(chain.count(Rational(5), std::nullopt) == 0);
}

TEST_CASE("multiple roots count once") {
  Polynomial p = from_roots({1, 1, 4});
  CHECK(SturmChain(p).count_all() == 2);
}

TEST_CASE("squarefree part and decomposition") {
  Polynomial p = from_roots({1, 1, 1, -2});
  CHECK(squarefree_part(p) == from_roots({1, -2}));
  auto factors = squarefree_decomposition(p);
  REQUIRE(factors.size() == 2);
  bool saw_single = false, saw_triple = false;
  for (const auto& f : factors) {
    if (f.multiplicity == 1 && f.p == from_roots({-2})) saw_single = true;
    if (f.multiplicity == 3 && f.p == from_roots({1})) saw_triple = true;
  }
  CHECK(saw_single);
  CHECK(saw_triple);
}

TEST_CASE("all_roots_real sees multiplicities") {
  CHECK(all_roots_real(from_roots({0, 0, 3})));
  CHECK(!all_roots_real(Polynomial({Rational(1), Rational(0), Rational(1)})));
  // (x^2+1)^2 (x-1): squarefree part has a real root but the quartic factor none.
  Polynomial mixed = Polynomial({Rational(1), Rational(0), Rational(1)}).pow(2) *
                     from_roots({1});
  CHECK(!all_roots_real(mixed));
  CHECK(all_roots_real(Polynomial({Rational(-2), Rational(0), Rational(1)})));
}

TEST_CASE("cauchy bound encloses the roots") {
  Polynomial p = from_roots({-7, 3});
  Rational b = cauchy_bound(p);
  CHECK(b > 7);
  CHECK_THROWS_AS(cauchy_bound(Polynomial(5)), DegenerateInput);
}

TEST_CASE("isolation separates and pins rational roots") {
  Polynomial p = from_roots({1, 2, 5}) *
                 Polynomial({Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
  auto intervals = isolate_real_roots(p);
  REQUIRE(intervals.size() == 5);
  for (size_t i = 0; i + 1 < intervals.size(); ++i)
    CHECK(intervals[i].hi <= intervals[i + 1].lo);
  int points = 0;
  for (const auto& iv : intervals)
    if (iv.is_point()) {
      ++points;
      CHECK(p(iv.lo) == 0);
    }
  CHECK(points == 3);
  SturmChain chain(p);
  for (const auto& iv : intervals)
    if (!iv.is_point()) CHECK(chain.count(iv) == 1);
}

TEST_CASE("refinement narrows an isolating interval") {
  Polynomial p({Rational(-2), Rational(0), Rational(1)});
  auto intervals = isolate_real_roots(p);
  REQUIRE(intervals.size() == 2);
  Interval iv = refine_interval(p, intervals[1], Rational(1, 1000));
  CHECK(iv.width() < Rational(1, 1000));
  CHECK(iv.lo * iv.lo < 2);
  CHECK(iv.hi * iv.hi > 2);
}

TEST_CASE("no real roots means no intervals") {
  CHECK(isolate_real_roots(Polynomial({Rational(1), Rational(0), Rational(1)})).empty());
}
