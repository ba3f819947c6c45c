#include "ehrlace/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>

#include "ehrlace/certify.hpp"
#include "ehrlace/errors.hpp"
#include "ehrlace/families.hpp"
#include "ehrlace/latticecount.hpp"
#include "ehrlace/recurrence.hpp"
#include "ehrlace/roots.hpp"
#include "ehrlace/series.hpp"
#include "ehrlace/sturm.hpp"

namespace ehrlace {

Polynomial h33_polynomial() {
  return Polynomial({Rational(1), Rational(113, 30), Rational(23, 4),
                     Rational(16, 3), Rational(9, 4), Rational(9, 10)});
}

Polynomial h331_polynomial() {
  return Polynomial({Rational(1), Rational(43, 10), Rational(481, 60),
                     Rational(33, 4), Rational(37, 6), Rational(49, 20),
                     Rational(49, 60)});
}

Polynomial eight_cycle_polynomial() {
  return Polynomial({Rational(1), Rational(7, 2), Rational(175, 36),
                     Rational(161, 36), Rational(35, 18), Rational(35, 36),
                     Rational(7, 36), Rational(1, 18)});
}

namespace {

bool line_ok(const Polynomial& p) {
  return certify_line(p).verdict == LineVerdict::AllOnLine;
}

bool interlace_ok(const Polynomial& f, const Polynomial& g) {
  return certify_interlace(f, g).verdict == InterlaceVerdict::Interlace;
}

bool family_suite(FamilyId::Tag tag, long d_max) {
  Polynomial prev;
  for (long d = 1; d <= d_max; ++d) {
    Polynomial f = family_polynomial({tag, d});
    if (!line_ok(f)) return false;
    if (d >= 2 && !interlace_ok(f, prev)) return false;
    prev = std::move(f);
  }
  return true;
}

bool criterion_closed_forms() {
  if (family_polynomial({FamilyId::Tag::K3n, 3}) != h33_polynomial()) return false;
  Polynomial h331 = h331_polynomial();
  if (!line_ok(h331)) return false;
  return certify_interlace(h331, h33_polynomial()).verdict == InterlaceVerdict::Fail;
}

bool criterion_line_suite() {
  return family_suite(FamilyId::Tag::Cross, 30) &&
         family_suite(FamilyId::Tag::Stasheff, 30) &&
         family_suite(FamilyId::Tag::RootA, 30) &&
         family_suite(FamilyId::Tag::RootC, 30);
}

// Resultant over the rationals via the Euclidean remainder sequence.
Rational resultant(Polynomial f, Polynomial g) {
  if (f.degree() < 0 || g.degree() < 0) return Rational(0);
  Rational res(1);
  bool neg = false;
  while (g.degree() > 0) {
    Polynomial r = f.divmod(g).second;
    if (r.is_zero()) return Rational(0);
    if ((f.degree() % 2) && (g.degree() % 2)) neg = !neg;
    res *= pow(g.leading(), static_cast<unsigned>(f.degree() - r.degree()));
    f = std::move(g);
    g = std::move(r);
  }
  res *= pow(g.coeff(0), static_cast<unsigned>(f.degree()));
  return neg ? -res : res;
}

Polynomial newton_interpolation(const std::vector<Rational>& xs,
                                std::vector<Rational> ys) {
  for (size_t k = 1; k < ys.size(); ++k)
    for (size_t i = ys.size() - 1; i >= k; --i)
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
  Polynomial p;
  Polynomial basis(Rational(1));
  for (size_t i = 0; i < ys.size(); ++i) {
    p += basis * ys[i];
    basis *= Polynomial({-xs[i], Rational(1)});
  }
  return p;
}

bool criterion_counterexamples() {
  Polynomial b6 = family_polynomial({FamilyId::Tag::RootB, 6});
  if (certify_line(b6).verdict != LineVerdict::NotSymmetric) return false;
  Polynomial d6 = family_polynomial({FamilyId::Tag::RootD, 6});
  if (certify_line(d6).verdict != LineVerdict::SymmetricButOffLine) return false;
  Polynomial hg = eight_cycle_polynomial();
  if (certify_line(hg).verdict != LineVerdict::SymmetricButOffLine) return false;
  // Companion C(s) = Res_z(H(z), H(2s - z)) vanishes exactly at the
  // half-sums (z_i + z_j)/2 of pairs of roots of H.  A certified real
  // root of C strictly left of -1 exhibits two roots of H whose real
  // parts sum below -2, hence a root with real part < -1.
  const int deg_c = hg.degree() * hg.degree();
  std::vector<Rational> xs, ys;
  Polynomial flipped = hg.scaled_arg(Rational(-1));
  for (int i = 0; i <= deg_c; ++i) {
    Rational s(i);
    xs.push_back(s);
    ys.push_back(resultant(hg, flipped.shifted(Rational(-2) * s)));
  }
  Polynomial companion = squarefree_part(newton_interpolation(xs, ys));
  for (Interval iv : isolate_real_roots(companion)) {
    for (int step = 0; step < 200 && !iv.is_point() && iv.lo < Rational(-1) &&
                       iv.hi >= Rational(-1);
         ++step)
      iv = refine_interval(companion, iv, iv.width() / 2);
    if (iv.is_point() && iv.lo < Rational(-1)) return true;
    // Exact sign change of the companion at rational points left of -1.
    if (!iv.is_point() && iv.hi < Rational(-1) &&
        companion(iv.lo).sign() * companion(iv.hi).sign() < 0)
      return true;
  }
  return false;
}

bool criterion_recurrence_bank() {
  for (const char* name : {"cross", "stasheff", "roota", "rootc"})
    if (!verify_three_term(builtin_rule(name), 50)) return false;
  return verify_relation_bank(40).all_ok();
}

bool criterion_discovery() {
  auto sol = discover_recurrence(rech3n_ansatz());
  RationalFunction a(Polynomial({Rational(16), Rational(13), Rational(3)}),
                     Polynomial({Rational(24), Rational(20), Rational(4)}));
  RationalFunction b(Polynomial({Rational(16), Rational(13), Rational(3)}),
                     Polynomial({Rational(48), Rational(40), Rational(8)}));
  Polynomial den8({Rational(-48), Rational(8), Rational(32), Rational(8)});
  RationalFunction c(Polynomial({Rational(0), Rational(18), Rational(13), Rational(1)}),
                     den8);
  RationalFunction d(
      Polynomial({Rational(-32), Rational(-13), Rational(9), Rational(4)}), den8);
  return sol.at("a") == a && sol.at("b") == b && sol.at("c") == c && sol.at("d") == d;
}

bool criterion_favard() {
  const std::pair<const char*, Rational> expected[] = {
      {"cross", Rational(4, 8)},
      {"stasheff", Rational(5, 8)},
      {"roota", Rational(6, 8)},
      {"rootc", Rational(8, 8)},
  };
  for (const auto& [name, m2] : expected) {
    FavardWindow w = favard_window(builtin_rule(name), 30);
    if (w.m2 != m2 || !w.all_in_unit_interval) return false;
  }
  return true;
}

bool criterion_oracle_equivalence() {
  for (int d = 1; d <= 5; ++d)
    if (ehrhart_interpolate(GraphSpec::path(d)) !=
        family_polynomial({FamilyId::Tag::Cross, d}))
      return false;
  if (ehrhart_interpolate(GraphSpec::complete_bipartite(1, 5)) !=
      family_polynomial({FamilyId::Tag::Cross, 5}))
    return false;
  for (int n = 2; n <= 5; ++n)
    if (ehrhart_interpolate(GraphSpec::complete(n)) !=
        family_polynomial({FamilyId::Tag::RootA, n - 1}))
      return false;
  for (int n = 1; n <= 4; ++n)
    if (ehrhart_interpolate(GraphSpec::complete_bipartite(2, n)) !=
        family_polynomial({FamilyId::Tag::K2n, n}))
      return false;
  if (ehrhart_interpolate(GraphSpec::complete_bipartite(3, 3)) !=
      family_polynomial({FamilyId::Tag::K3n, 3}))
    return false;
  return ehrhart_interpolate(GraphSpec::cycle(8)) == eight_cycle_polynomial();
}

bool criterion_groebner_counts() {
  for (int n = 1; n <= 4; ++n)
    if (!verify_corollary_counts(1, n, 6)) return false;
  return verify_corollary_counts(2, 2, 6) && verify_corollary_counts(2, 3, 6) &&
         verify_corollary_counts(3, 3, 6);
}

bool criterion_2n_theorems() {
  for (long d = 3; d <= 13; ++d) {
    long bound = (d % 2 == 1) ? 4 * d - 6 : 4 * d + 2;
    for (long c = -2; c <= bound; c += 2)
      if (!line_ok(gdc_polynomial(d, Rational(c)))) return false;
  }
  for (long m = 1; m <= 10; ++m)
    for (long n = m; n <= 10; ++n) {
      FamilyId id{FamilyId::Tag::Bipartite2};
      id.p1 = m;
      id.p2 = n;
      if (!line_ok(delta_to_polynomial(family_series(id)))) return false;
    }
  return true;
}

bool criterion_lemma_bank() {
  for (long d = 2; d <= 12; ++d)
    for (long j = 0; j < d; ++j) {
      Polynomial h = hdj_polynomial(d, j);
      Polynomial mirrored = h.scaled_arg(Rational(-1)).shifted(Rational(d - j));
      if ((d - 1) % 2 == 1) mirrored = -mirrored;
      if (h != mirrored) return false;
    }
  return verify_Hdj_recursion(14) && verify_G_lemmas(40).all_ok();
}

bool criterion_duals() {
  if (!family_suite(FamilyId::Tag::DualA, 30)) return false;
  for (long d = 0; d <= 8; ++d)
    if (!line_ok(family_polynomial({FamilyId::Tag::Cube, d}))) return false;
  for (long d = 2; d <= 6; ++d)
    if (certify_line(family_polynomial({FamilyId::Tag::DualSimplexP, d})).verdict ==
        LineVerdict::AllOnLine)
      return false;
  return true;
}

bool mirror_symmetric(const std::vector<std::complex<double>>& roots, double tol) {
  for (const auto& z : roots) {
    bool found = false;
    for (const auto& w : roots)
      if (std::abs(-1.0 - z.real() - w.real()) < tol &&
          std::abs(z.imag() - w.imag()) < tol)
        found = true;
    if (!found) return false;
  }
  return true;
}

bool criterion_numeric() {
  auto roots = numeric_roots(family_polynomial({FamilyId::Tag::K3n, 3}));
  const double ims[] = {-1.7292, -0.6602, 0.0, 0.6602, 1.7292};
  if (roots.size() != 5) return false;
  // Real parts agree to machine precision, so order by imaginary part.
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.imag() < b.imag(); });
  for (size_t i = 0; i < 5; ++i)
    if (std::abs(roots[i].real() + 0.5) > 1e-3 || std::abs(roots[i].imag() - ims[i]) > 1e-3)
      return false;
  auto b6 = numeric_roots(family_polynomial({FamilyId::Tag::RootB, 6}));
  auto d6 = numeric_roots(family_polynomial({FamilyId::Tag::RootD, 6}));
  return b6.size() == 6 && d6.size() == 6 && !mirror_symmetric(b6, 1e-6) &&
         mirror_symmetric(d6, 1e-6);
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite() {
  const std::pair<const char*, std::function<bool()>> criteria[] = {
      {"closed-form fidelity", criterion_closed_forms},
      {"line certification suite", criterion_line_suite},
      {"counterexamples", criterion_counterexamples},
      {"recurrence bank", criterion_recurrence_bank},
      {"coefficient discovery", criterion_discovery},
      {"favard window", criterion_favard},
      {"oracle equivalence", criterion_oracle_equivalence},
      {"groebner count equivalence", criterion_groebner_counts},
      {"(2,n) theorem coverage", criterion_2n_theorems},
      {"lemma bank", criterion_lemma_bank},
      {"duals", criterion_duals},
      {"numeric reproduction", criterion_numeric},
  };
  std::vector<CriterionResult> results;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = run();
    } catch (const std::exception&) {
      pass = false;
    }
    auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    results.push_back({index++, name, pass, elapsed.count()});
  }
  return results;
}

}  // namespace ehrlace
