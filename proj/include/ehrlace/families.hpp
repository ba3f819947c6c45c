#pragma once

#include <string>
#include <vector>

#include "ehrlace/polynomial.hpp"
#include "ehrlace/series.hpp"

namespace ehrlace {

// Closed-form polynomial / series family constructors.
//
// CLI spelling (also accepted by parse_family):
//   cross:d=5  stasheff:d=12  roota:d=3  rootb:d=6  rootc:d=5  rootd:d=6
//   duala:d=3  cube:d=2  simplexp:d=3  dualsimplexp:d=3
//   k1n:n=5  k2n:n=3  k3n:n=3  bip2:m=2,n=5
//   hdj:d=6,j=3  fdj:d=6,j=3  adk:d=6,k=1  bdk:d=6,k=1  g:d=9,c=30
struct FamilyId {
  enum class Tag {
    Cross,
    Stasheff,
    RootA,
    RootB,
    RootC,
    RootD,
    DualA,
    Cube,
    SimplexP,
    DualSimplexP,
    K1n,
    K2n,
    K3n,
    Bipartite2,
    Hdj,
    Fdj,
    Adk,
    Bdk,
    Gdc,
  };
  Tag tag;
  long p1 = 0;              // d, n, or m depending on the family
  long p2 = 0;              // j, k, or n for two-parameter families
  Rational c = Rational(0); // only Gdc

  std::string str() const;
};

FamilyId parse_family(const std::string& spec);

// The family's polynomial in closed form (degree d for Ehrhart families,
// d - 1 for Hdj and Gdc). Throws ParamError on out-of-range parameters.
Polynomial family_polynomial(const FamilyId& id);

// The family's series numerator (delta-vector). Only defined for families
// the closed forms give as series: Cross, RootB, RootD, SimplexP, Cube,
// K1n, K2n, K3n, Bipartite2.
EhrhartData family_series(const FamilyId& id);

// H^d_j(x) = sum_i C(j,i) C(x+d-1-i, d-1); needs 0 <= j < d.
Polynomial hdj_polynomial(long d, long j);

// F^d_j = Htilde^d_j (x - (d-j)/2), where H^d_j = (x+1)...(x+d-1-j) Htilde^d_j.
// An inexact division here would falsify the factorization and raises
// InternalError.
Polynomial build_F(long d, long j);

// Even/odd compressions: F^d_{2k}(x) = A^d_k(x^2), F^d_{2k+1}(x) = B^d_k(x^2) x.
Polynomial build_A(long d, long k);
Polynomial build_B(long d, long k);

// G^d_c = H^d_{d-1}(x) + (c - 2) H^d_{d-3}(x - 1); needs d >= 3.
Polynomial gdc_polynomial(long d, const Rational& c);

// Terminating hypergeometric sum
//   sum_k prod(upper_i)_k / prod(lower_j)_k * arg^k / k!
// over at most `terms` terms; the series must terminate within that window.
Rational hypergeometric_sum(const std::vector<Rational>& upper,
                            const std::vector<Rational>& lower,
                            const Rational& arg, unsigned terms);

}  // namespace ehrlace
