#pragma once

#include <complex>
#include <vector>

#include "xlag/exactnum/poly.hpp"

namespace xlag {

struct RootOptions {
  double tol = 1e-12;
  int max_iterations = 200;
};

/// All deg(p) complex roots (with multiplicity) by Aberth-Ehrlich
/// simultaneous iteration on the double-converted coefficients. Every
/// returned root satisfies |p(z)| <= tol * sum_j |a_j| |z|^j. Roots are
/// sorted by real part, then imaginary part.
/// Throws NonConvergence if the cap is reached before the residual test
/// passes, InvalidParams for constant p.
std::vector<std::complex<double>> complex_roots(const Poly& p, const RootOptions& opts = {});

/// Backward-error residual |p(z)| / sum_j |a_j| |z|^j.
double relative_residual(const std::vector<double>& coeffs, std::complex<double> z);

}  // namespace xlag
