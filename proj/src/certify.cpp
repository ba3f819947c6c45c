#include "ehrlace/certify.hpp"

#include <algorithm>

#include "ehrlace/errors.hpp"

namespace ehrlace {

std::string to_string(LineVerdict v) {
  switch (v) {
    case LineVerdict::AllOnLine: return "AllOnLine";
    case LineVerdict::SymmetricButOffLine: return "SymmetricButOffLine";
    case LineVerdict::NotSymmetric: return "NotSymmetric";
  }
  return "?";
}

Polynomial to_line_polynomial(const Polynomial& f, const Rational& center) {
  if (f.is_zero()) throw DegenerateInput("to_line_polynomial of zero polynomial");
  const int d = f.degree();
  Polynomial shifted = f.shifted(center);  // f(z + center)
  // Symmetry (-1)^d f(center+z) = f(center-z) holds iff only terms z^k with
  // k = d (mod 2) survive.
  for (int k = 0; k <= d; ++k) {
    if ((k - d) % 2 != 0 && shifted.coeff(k) != 0)
      throw NotSymmetricError("polynomial is not symmetric about " + to_string(center) +
                                  " (coefficient index " + std::to_string(k) + ")",
                              k);
  }
  // g(y) = i^(-d) f(center + i y): coefficient k picks up i^(k-d) = (-1)^((d-k)/2).
  std::vector<Rational> g(d + 1, Rational(0));
  for (int k = d; k >= 0; k -= 2) {
    Rational c = shifted.coeff(k);
    if (((d - k) / 2) % 2 == 1) c = -c;
    g[k] = c;
  }
  return Polynomial(std::move(g));
}

LineCertificate certify_line(const Polynomial& f, const Rational& center) {
  if (f.is_zero()) throw DegenerateInput("certify_line of zero polynomial");
  LineCertificate cert;
  cert.subject = f;
  cert.line_center = center;
  try {
    cert.transformed = to_line_polynomial(f, center);
  } catch (const NotSymmetricError&) {
    cert.verdict = LineVerdict::NotSymmetric;
    return cert;
  }
  cert.verdict = all_roots_real(cert.transformed) ? LineVerdict::AllOnLine
                                                  : LineVerdict::SymmetricButOffLine;
  if (!cert.transformed.is_constant())
    cert.isolating = isolate_real_roots(cert.transformed);
  return cert;
}

namespace {

char label_interval(const Interval& iv, const Polynomial& f1, const SturmChain& cf,
                    const Polynomial& g1, const SturmChain& cg) {
  if (iv.is_point()) return f1(iv.lo) == 0 ? 'f' : 'g';
  if (cf.count(iv) == 1) return 'f';
  if (cg.count(iv) != 1)
    throw InternalError("isolating interval of product owns no factor root");
  return 'g';
}

}  // namespace

InterlaceCertificate certify_interlace(const Polynomial& f, const Polynomial& g,
                                       const Rational& center) {
  if (g.is_zero() || f.degree() != g.degree() + 1)
    throw DegreeError("certify_interlace needs deg f = deg g + 1");
  LineCertificate cf = certify_line(f, center);
  LineCertificate cg = certify_line(g, center);
  if (cf.verdict != LineVerdict::AllOnLine || cg.verdict != LineVerdict::AllOnLine)
    throw PreconditionError("certify_interlace inputs must certify AllOnLine first");

  InterlaceCertificate cert;
  cert.f = f;
  cert.g = g;
  cert.verdict = InterlaceVerdict::Fail;

  Polynomial F = cf.transformed, G = cg.transformed;
  Polynomial h = G.is_constant() ? Polynomial(Rational(1)) : Polynomial::gcd(F, G);
  Polynomial f1 = h.degree() > 0 ? F.exact_div(h).monic() : F.monic();
  Polynomial g1 = h.degree() > 0 ? G.exact_div(h).monic() : G.monic();

  // A root of f of multiplicity m needs the same root in g with
  // multiplicity >= m-1 (and vice versa); after pulling out the gcd this
  // is exactly squarefreeness of both parts.
  if (squarefree_part(f1).degree() != f1.degree()) return cert;
  if (g1.degree() > 0 && squarefree_part(g1).degree() != g1.degree()) return cert;

  std::vector<InterlaceWitness> order;
  if (f1.degree() > 0) {
    SturmChain chain_f(f1);
    SturmChain chain_g(g1.degree() > 0 ? g1 : Polynomial(Rational(1)));
    Polynomial prod = g1.degree() > 0 ? f1 * g1 : f1;
    auto intervals = isolate_real_roots(prod);
    if (static_cast<int>(intervals.size()) != prod.degree())
      throw InternalError("transformed interlacing product lost real roots");
    for (const auto& iv : intervals)
      order.push_back({label_interval(iv, f1, chain_f, g1, chain_g), iv});
    // Strict alternation f, g, f, ..., f on the coprime parts.
    for (size_t i = 0; i < order.size(); ++i) {
      char want = (i % 2 == 0) ? 'f' : 'g';
      if (order[i].label != want) return cert;
    }
    if (order.back().label != 'f') return cert;
  }
  // Certified common roots count as permitted equalities.
  if (h.degree() > 0) {
    for (const auto& iv : isolate_real_roots(h)) {
      auto pos = std::upper_bound(order.begin(), order.end(), iv,
                                  [](const Interval& a, const InterlaceWitness& b) {
                                    return a.lo < b.where.lo;
                                  });
      order.insert(pos, {'=', iv});
    }
  }
  cert.merged_ordering = std::move(order);
  cert.verdict = InterlaceVerdict::Interlace;
  return cert;
}

bool check_cone_interlace(const Polynomial& f, const std::vector<Polynomial>& gs,
                          const std::vector<Rational>& lambdas,
                          const Rational& center) {
  if (gs.empty() || gs.size() != lambdas.size())
    throw ParamError("check_cone_interlace needs matching nonempty g/lambda lists");
  for (const auto& l : lambdas)
    if (l < 0) throw ParamError("cone coefficients must be nonnegative");
  Polynomial sum;
  for (size_t i = 0; i < gs.size(); ++i) {
    if (certify_interlace(f, gs[i], center).verdict != InterlaceVerdict::Interlace)
      throw PreconditionError("every g_i must interlace f");
    sum += gs[i].monic() * lambdas[i];
  }
  if (sum.is_zero()) throw ParamError("cone combination is identically zero");
  return certify_interlace(f, sum, center).verdict == InterlaceVerdict::Interlace;
}

}  // namespace ehrlace
