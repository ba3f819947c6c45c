#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrlace/errors.hpp"
#include "ehrlace/families.hpp"

using namespace ehrlace;
using Tag = FamilyId::Tag;

TEST_CASE("family spec parsing round trips") {
  CHECK(parse_family("cross:d=5").str() == "cross:d=5");
  CHECK(parse_family("bip2:m=2,n=5").str() == "bip2:m=2,n=5");
  CHECK(parse_family("g:d=9,c=30").str() == "g:d=9,c=30");
  CHECK(parse_family("hdj:d=6,j=3").str() == "hdj:d=6,j=3");
  CHECK_THROWS_AS(parse_family("nosuch:d=3"), UsageError);
  CHECK_THROWS_AS(parse_family("cross:q=3"), UsageError);
  CHECK_THROWS_AS(parse_family("cross:d=x"), UsageError);
}

TEST_CASE("published complete-bipartite polynomial") {
  Polynomial h = family_polynomial({Tag::K3n, 3});
  CHECK(h == Polynomial({Rational(1), Rational(113, 30), Rational(23, 4),
                         Rational(16, 3), Rational(9, 4), Rational(9, 10)}));
}

TEST_CASE("small closed forms") {
  CHECK(family_polynomial({Tag::Cross, 2}) ==
        Polynomial({Rational(1), Rational(2), Rational(2)}));
  CHECK(family_polynomial({Tag::Cube, 2}) ==
        Polynomial({Rational(1), Rational(4), Rational(4)}));
  CHECK(family_polynomial({Tag::DualA, 3}) ==
        Polynomial({Rational(1), Rational(4), Rational(6), Rational(4)}));
  CHECK(family_polynomial({Tag::K1n, 4}) == family_polynomial({Tag::Cross, 4}));
  CHECK_THROWS_AS(family_polynomial({Tag::K3n, 1}), ParamError);
}

TEST_CASE("series and polynomials are consistent") {
  for (auto tag : {Tag::K2n, Tag::K3n, Tag::RootB, Tag::RootD}) {
    long n = tag == Tag::K3n ? 3 : 4;
    EhrhartData e = family_series({tag, n});
    Polynomial h = family_polynomial({tag, n});
    for (unsigned k = 0; k <= 6; ++k)
      CHECK(series_coefficient(e, k) == h(Rational(static_cast<long>(k))));
  }
}

TEST_CASE("H^d_j generates the series (1+t)^j/(1-t)^d") {
  const long d = 5, j = 3;
  Polynomial h = hdj_polynomial(d, j);
  EhrhartData e;
  e.delta = Polynomial({Rational(1), Rational(1)}).pow(j).coeffs();
  e.dim = static_cast<int>(d) - 1;
  for (unsigned k = 0; k <= 10; ++k)
    CHECK(h(Rational(static_cast<long>(k))) == series_coefficient(e, k));
  CHECK_THROWS_AS(hdj_polynomial(4, 4), ParamError);
}

TEST_CASE("F base cases and parity compressions") {
  CHECK(build_F(6, 0) == Polynomial(Rational(1, 120)));
  CHECK(build_F(6, 1) == Polynomial({Rational(0), Rational(2, 120)}));
  for (long k = 0; 2 * k <= 5; ++k) {
    Polynomial a = build_A(6, k);
    CHECK(a.degree() == static_cast<int>(k));
  }
  Polynomial f = build_F(7, 4);
  Polynomial a = build_A(7, 2);
  for (long v : {0, 1, 2, 3})
    CHECK(f(Rational(v)) == a(Rational(v * v)));
  Polynomial g = build_F(7, 5);
  Polynomial b = build_B(7, 2);
  for (long v : {1, 2, 3})
    CHECK(g(Rational(v)) == b(Rational(v * v)) * v);
}

TEST_CASE("G interpolates the (2,n) Ehrhart polynomials") {
  for (long n = 2; n <= 6; ++n)
    CHECK(gdc_polynomial(n + 2, Rational(2 * n)) == family_polynomial({Tag::K2n, n}));
  CHECK_THROWS_AS(gdc_polynomial(2, Rational(0)), ParamError);
}

TEST_CASE("hypergeometric forms of the section-3 families") {
  // H(m) = C(m+d, m) * pFq(...; 1) from the closing remark of the section.
  for (long d : {3, 5}) {
    for (long m : {1, 2, 4}) {
      Rational prefactor(binomial(m + d, static_cast<unsigned>(m)));
      Rational st = hypergeometric_sum({Rational(-d - 1), Rational(-d), Rational(-m)},
                                       {Rational(2), Rational(-d - m)}, Rational(1), 64);
      CHECK(prefactor * st ==
            family_polynomial({Tag::Stasheff, d})(Rational(m)));
      Rational ra = hypergeometric_sum({Rational(-d), Rational(-d), Rational(-m)},
                                       {Rational(1), Rational(-d - m)}, Rational(1), 64);
      CHECK(prefactor * ra == family_polynomial({Tag::RootA, d})(Rational(m)));
      // From the term ratio of sum_k C(2d,2k) C(m+d-k,d): a 3F2 with a
      // half-integer pair coming from splitting C(2d,2k).
      Rational rc = hypergeometric_sum(
          {Rational(-d), Rational(1, 2) - d, Rational(-m)},
          {Rational(1, 2), Rational(-d - m)}, Rational(1), 64);
      CHECK(prefactor * rc == family_polynomial({Tag::RootC, d})(Rational(m)));
    }
  }
}

TEST_CASE("hypergeometric error paths") {
  CHECK_THROWS_AS(hypergeometric_sum({Rational(-5)}, {Rational(-1)}, Rational(1), 64),
                  PoleError);
  CHECK_THROWS_AS(hypergeometric_sum({Rational(1, 2)}, {}, Rational(1), 16),
                  ParamError);
  CHECK(hypergeometric_sum({Rational(-1)}, {}, Rational(1), 8) == 0);
}
