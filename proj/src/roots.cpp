#include "ehrlace/roots.hpp"

#include <algorithm>
#include <cmath>

#include "ehrlace/errors.hpp"
#include "ehrlace/sturm.hpp"

namespace ehrlace {

namespace {

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

// Aberth-Ehrlich simultaneous iteration on a squarefree polynomial.
std::vector<std::complex<double>> aberth(const Polynomial& p, double tol,
                                         int max_iterations) {
  const int n = p.degree();

  // Monic double coefficients.
  std::vector<double> c(n + 1);
  for (int i = 0; i <= n; ++i)
    c[i] = (p.coeff(i) / p.leading()).convert_to<double>();
  std::vector<double> dc(n);
  for (int i = 1; i <= n; ++i) dc[i - 1] = c[i] * i;

  if (n == 1) return {std::complex<double>(-c[0], 0.0)};

  const double radius = cauchy_bound(p).convert_to<double>();
  std::vector<std::complex<double>> z(n);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < n; ++i) {
    // Offset angle keeps the start away from the axes, which would be
    // fixed by real-coefficient symmetry.
    double theta = 2.0 * pi * i / n + pi / (2.0 * n) + 0.3;
    z[i] = std::polar(radius, theta);
  }

  for (int it = 0; it < max_iterations; ++it) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> pv = horner(c, z[i]);
      std::complex<double> dv = horner(dc, z[i]);
      if (dv == 0.0) {
        z[i] += 1e-8 * (1.0 + std::abs(z[i]));
        worst = 1.0;
        continue;
      }
      std::complex<double> w = pv / dv;
      std::complex<double> s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      std::complex<double> denom = 1.0 - w * s;
      std::complex<double> corr = (denom == 0.0) ? w : w / denom;
      z[i] -= corr;
      worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[i])));
    }
    if (worst <= tol) return z;
  }
  throw RootConvergenceError("Aberth iteration did not converge after " +
                                 std::to_string(max_iterations) + " iterations",
                             z);
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(const Polynomial& p, double tol,
                                                int max_iterations) {
  if (p.degree() < 1) throw DegenerateInput("numeric_roots needs degree >= 1");

  // Multiple roots stall the iteration around eps^(1/m); deflate them away
  // exactly first and replicate each root by its multiplicity.
  std::vector<std::complex<double>> z;
  for (const auto& f : squarefree_decomposition(p)) {
    std::vector<std::complex<double>> part = aberth(f.p, tol, max_iterations);
    for (const auto& r : part)
      for (unsigned m = 0; m < f.multiplicity; ++m) z.push_back(r);
  }
  std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return z;
}

}  // namespace ehrlace
