#pragma once

#include <string>
#include <vector>

#include "ehrlace/polynomial.hpp"
#include "ehrlace/sturm.hpp"

namespace ehrlace {

enum class LineVerdict { AllOnLine, SymmetricButOffLine, NotSymmetric };

std::string to_string(LineVerdict v);

// Exact verdict on whether every root of `subject` lies on the vertical
// line Re(z) = line_center. `transformed` is the real polynomial in the
// line parameter y (subject(center + i y) made real); its real roots are
// the on-line roots. When the verdict is AllOnLine the isolating intervals
// cover all deg(subject) roots (distinct ones, multiplicity via gcd chain).
struct LineCertificate {
  Polynomial subject;
  Rational line_center;
  LineVerdict verdict;
  Polynomial transformed;          // empty when NotSymmetric
  std::vector<Interval> isolating; // real roots of `transformed`
};

enum class InterlaceVerdict { Interlace, Fail };

// Witness of the alternating root ordering on the line: one entry per
// distinct root of f and g in increasing line parameter, labelled 'f', 'g'
// or '=' for a certified common root.
struct InterlaceWitness {
  char label;
  Interval where;
};

struct InterlaceCertificate {
  Polynomial f;
  Polynomial g;
  InterlaceVerdict verdict;
  std::vector<InterlaceWitness> merged_ordering;
};

// The real polynomial g with g(y) = i^(-d) f(center + i y). Requires the
// symmetry (-1)^d f(center + z) == f(center - z); throws NotSymmetricError
// (carrying the offending coefficient index) otherwise.
// Sign convention pinned by: f = 2x^2+2x+1, center -1/2  ->  g = 2y^2 - 1/2.
Polynomial to_line_polynomial(const Polynomial& f, const Rational& center);

LineCertificate certify_line(const Polynomial& f,
                             const Rational& center = Rational(-1, 2));

// Certifies that g R-interlaces f on the vertical line through `center`
// (deg f = deg g + 1, both certified AllOnLine first). Equalities permitted
// by the interlacing definition are detected exactly via the gcd factor;
// strict alternation is then required on the coprime parts.
InterlaceCertificate certify_interlace(const Polynomial& f, const Polynomial& g,
                                       const Rational& center = Rational(-1, 2));

// Certifies that the monic-normalized nonnegative combination of the g_i
// still interlaces f (each g_i must interlace f already).
bool check_cone_interlace(const Polynomial& f, const std::vector<Polynomial>& gs,
                          const std::vector<Rational>& lambdas,
                          const Rational& center = Rational(-1, 2));

}  // namespace ehrlace
