#pragma once

#include <optional>
#include <vector>

#include "ehrlace/polynomial.hpp"

namespace ehrlace {

// Closed interval with rational endpoints. An isolating interval produced
// by isolate_real_roots contains exactly one distinct root of its subject
// polynomial; internally intervals are handled half-open as (lo, hi], with
// lo == hi meaning an exact rational root.
struct Interval {
  Rational lo;
  Rational hi;
  bool is_point() const { return lo == hi; }
  Rational mid() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

// Sturm chain of a nonzero polynomial, built once and reusable for any
// number of interval queries. The chain uses fraction-free pseudo-remainders
// over the integers with content stripping to control coefficient growth.
class SturmChain {
public:
  explicit SturmChain(const Polynomial& p);

  // Distinct real roots in (lo, hi]. Unset bounds mean -inf / +inf.
  long count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;
  long count(const Interval& iv) const { return count(iv.lo, iv.hi); }
  long count_all() const { return count(std::nullopt, std::nullopt); }

private:
  long variations_at(const Rational& x) const;
  long variations_at_infinity(int dir) const;
  std::vector<std::vector<BigInt>> chain_;  // integer polynomials, low-to-high
};

// p / gcd(p, p'), monic. p must be nonzero.
Polynomial squarefree_part(const Polynomial& p);

// Yun decomposition: p = lc * prod factors[i].p ^ factors[i].multiplicity,
// with the factors monic, squarefree and pairwise coprime.
struct SquarefreeFactor {
  Polynomial p;
  unsigned multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

// True iff every root of p is real (counting multiplicity), decided by the
// gcd chain: each squarefree factor must have as many distinct real roots
// as its degree.
bool all_roots_real(const Polynomial& p);

// 1 + max|a_i| / |a_d|; every real root lies in (-bound, bound).
Rational cauchy_bound(const Polynomial& p);

// One disjoint interval per distinct real root, sorted by lo.
std::vector<Interval> isolate_real_roots(const Polynomial& p);

// Shrinks an isolating interval of a squarefree polynomial below the given
// width by bisection. sf(lo) and sf(hi) must have opposite signs unless the
// interval is already a point.
Interval refine_interval(const Polynomial& sf, Interval iv, const Rational& width);

}  // namespace ehrlace
