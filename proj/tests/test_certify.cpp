#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrlace/acceptance.hpp"
#include "ehrlace/certify.hpp"
#include "ehrlace/errors.hpp"
#include "ehrlace/families.hpp"

using namespace ehrlace;
using Tag = FamilyId::Tag;

TEST_CASE("line transform sign convention") {
  Polynomial f({Rational(1), Rational(2), Rational(2)});  // 2x^2 + 2x + 1
  Polynomial g = to_line_polynomial(f, Rational(-1, 2));
  CHECK(g == Polynomial({Rational(-1, 2), Rational(0), Rational(2)}));
}

TEST_CASE("asymmetric input is rejected with the offending index") {
  Polynomial f({Rational(3), Rational(2), Rational(1)});
  try {
    to_line_polynomial(f, Rational(-1, 2));
    FAIL("expected NotSymmetricError");
  } catch (const NotSymmetricError& e) {
    CHECK(e.index == 1);
  }
}

TEST_CASE("verdicts on the three family classes") {
  CHECK(certify_line(family_polynomial({Tag::Cross, 3})).verdict ==
        LineVerdict::AllOnLine);
  CHECK(certify_line(family_polynomial({Tag::Stasheff, 12})).verdict ==
        LineVerdict::AllOnLine);
  CHECK(certify_line(family_polynomial({Tag::RootB, 6})).verdict ==
        LineVerdict::NotSymmetric);
  CHECK(certify_line(family_polynomial({Tag::RootD, 6})).verdict ==
        LineVerdict::SymmetricButOffLine);
  CHECK(certify_line(eight_cycle_polynomial()).verdict ==
        LineVerdict::SymmetricButOffLine);
}

TEST_CASE("isolating intervals cover the distinct transformed roots") {
  LineCertificate cert = certify_line(family_polynomial({Tag::Cross, 4}));
  REQUIRE(cert.verdict == LineVerdict::AllOnLine);
  CHECK(static_cast<int>(cert.isolating.size()) == cert.transformed.degree());
}

TEST_CASE("consecutive cross members interlace") {
  Polynomial f5 = family_polynomial({Tag::K1n, 5});
  Polynomial f6 = family_polynomial({Tag::K1n, 6});
  InterlaceCertificate cert = certify_interlace(f6, f5);
  CHECK(cert.verdict == InterlaceVerdict::Interlace);
  REQUIRE(cert.merged_ordering.size() == 11);
  for (size_t i = 0; i < cert.merged_ordering.size(); ++i)
    CHECK(cert.merged_ordering[i].label == (i % 2 == 0 ? 'f' : 'g'));
}

TEST_CASE("published counterexample pair does not interlace") {
  CHECK(certify_interlace(h331_polynomial(), h33_polynomial()).verdict ==
        InterlaceVerdict::Fail);
}

TEST_CASE("permitted equalities are certified as such") {
  Polynomial g = family_polynomial({Tag::Cross, 2});
  Polynomial f = g * Polynomial({Rational(1), Rational(2)});  // (2x+1) g
  InterlaceCertificate cert = certify_interlace(f, g);
  CHECK(cert.verdict == InterlaceVerdict::Interlace);
  int equalities = 0;
  for (const auto& w : cert.merged_ordering)
    if (w.label == '=') ++equalities;
  CHECK(equalities == 2);
}

TEST_CASE("precondition and degree errors") {
  Polynomial f = family_polynomial({Tag::Cross, 3});
  CHECK_THROWS_AS(certify_interlace(f, family_polynomial({Tag::Cross, 1})),
                  DegreeError);
  Polynomial off = family_polynomial({Tag::RootD, 6});
  CHECK_THROWS_AS(certify_interlace(off, family_polynomial({Tag::Cross, 5})),
                  PreconditionError);
}

TEST_CASE("nonnegative cones preserve interlacing") {
  Polynomial f = family_polynomial({Tag::K2n, 4});
  Polynomial g1 = family_polynomial({Tag::K1n, 4});
  Polynomial g2 = family_polynomial({Tag::K1n, 3}) * Polynomial({Rational(1), Rational(2)});
  CHECK(check_cone_interlace(f, {g1, g2}, {Rational(1), Rational(1)}));
  CHECK(check_cone_interlace(f, {g1, g2}, {Rational(3), Rational(0)}));
  CHECK_THROWS_AS(check_cone_interlace(f, {g1, g2}, {Rational(-1), Rational(1)}),
                  ParamError);
}

TEST_CASE("triples from the three-term recurrences certify consistently") {
  for (auto tag : {Tag::Cross, Tag::RootA, Tag::RootC}) {
    Polynomial f1 = family_polynomial({tag, 5});
    Polynomial f2 = family_polynomial({tag, 4});
    Polynomial f3 = family_polynomial({tag, 3});
    CHECK(certify_interlace(f1, f2).verdict == InterlaceVerdict::Interlace);
    CHECK(certify_interlace(f2, f3).verdict == InterlaceVerdict::Interlace);
  }
}
