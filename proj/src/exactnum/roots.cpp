#include "xlag/exactnum/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xlag/errors.hpp"

namespace xlag {

namespace {

using cplx = std::complex<double>;

// p(z) and p'(z) by Horner.
std::pair<cplx, cplx> eval_with_derivative(const std::vector<double>& a, cplx z) {
  cplx p = 0.0;
  cplx dp = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

}  // namespace

double relative_residual(const std::vector<double>& coeffs, cplx z) {
  double scale = 0.0;
  const double r = std::abs(z);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) scale = scale * r + std::abs(*it);
  cplx p = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = p * z + *it;
  return scale == 0.0 ? 0.0 : std::abs(p) / scale;
}

std::vector<cplx> complex_roots(const Poly& p, const RootOptions& opts) {
  if (p.degree() < 1) throw InvalidParams("complex_roots needs degree >= 1");
  // Roots at z = 0 are known exactly from the valuation.
  const int v = p.valuation();
  std::vector<cplx> zeros(v, cplx(0.0, 0.0));
  const int n = p.degree() - v;
  if (n == 0) return zeros;
  std::vector<double> a = p.divide_by_z_power(v).to_double();
  const double lead = a.back();
  for (auto& c : a) c /= lead;

  auto sorted = [&zeros](std::vector<cplx> z) {
    z.insert(z.end(), zeros.begin(), zeros.end());
    // Conjugate pairs agree in the real part only up to rounding, so the
    // primary key is the real part rounded to 1e-9.
    auto key = [](const cplx& x) { return std::round(x.real() * 1e9); };
    std::sort(z.begin(), z.end(), [&](const cplx& x, const cplx& y) {
      if (key(x) != key(y)) return key(x) < key(y);
      return x.imag() < y.imag();
    });
    return z;
  };

  if (n == 1) return sorted({cplx(-a[0], 0.0)});

  // Initial guesses on a circle whose radius is the Fujiwara bound; the
  // angular offset breaks the symmetry with respect to the real axis.
  double radius = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = std::pow(std::abs(a[j]), 1.0 / (n - j));
    radius = std::max(radius, j == 0 ? std::pow(std::abs(a[0]) / 2.0, 1.0 / n) : t);
  }
  radius = std::max(2.0 * radius, 1e-3);
  std::vector<cplx> z(n);
  for (int i = 0; i < n; ++i)
    z[i] = std::polar(radius, 2.0 * std::numbers::pi * i / n + 0.4);

  auto all_converged = [&] {
    for (const auto& zi : z)
      if (relative_residual(a, zi) > opts.tol) return false;
    return true;
  };

  bool done = false;
  for (int iter = 0; iter < opts.max_iterations && !done; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto [pv, dpv] = eval_with_derivative(a, z[i]);
      if (pv == 0.0) continue;
      const cplx ratio = pv / dpv;
      cplx repulsion = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const cplx step = ratio / (1.0 - ratio * repulsion);
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (max_step < 1e-3 * opts.tol || (max_step < 1e-14 && all_converged())) done = true;
  }
  if (!all_converged()) throw NonConvergence("Aberth iteration did not reach the residual tolerance");

  return sorted(std::move(z));
}

}  // namespace xlag
