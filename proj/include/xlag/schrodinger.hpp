#pragma once

#include <functional>
#include <span>
#include <vector>

#include "json.hpp"
#include "xlag/factorization/verify.hpp"

namespace xlag {

/// Gauge factor mu(z) = e^{exp_rate z} z^power factor(z).
struct Gauge {
  Rat exp_rate;
  Rat power;
  RatFunc factor = RatFunc(1);

  /// mu'/mu in the algebraic variable z.
  RatFunc log_derivative_z() const;
  /// d/dx log(mu(zeta(x))) as a rational function of x.
  RatFunc log_derivative_x() const;
  double eval(double z) const;
};

/// zeta(x) = x^2 / 4, the change of variable with zeta'(x)^2 = zeta(x).
Poly zeta_poly();

/// U = -(r o zeta) + (mu o zeta)''/(mu o zeta), with the last term computed
/// as d' + d^2 from the exact log-derivative d. Result is rational in x.
RatFunc potential_from(const RatFunc& r, const Gauge& mu);

/// Physical-gauge data for a parameter set. U0, U2 are built from the
/// operator coefficients (r0 = 0 and r2 of T2) and their gauge factors;
/// U2_crum = U0 - 2 d^2/dx^2 log W[psi1, psi2] is the independent route.
struct GaugeData {
  XLParams params;
  Gauge mu0;
  Gauge mu2;
  RatFunc U0;
  RatFunc U2;
  RatFunc U2_crum;
  /// d/dx log W[psi1, psi2] = (eta12 o zeta)'/(eta12 o zeta) - (1+k) zeta'/zeta - zeta'.
  RatFunc log_wronskian_x;
};

/// Throws InvalidParams unless weight regular, PoleOnAxis if eta12 vanishes
/// on [0, inf).
GaugeData build_potentials(const XLParams& params, const FactorizationChain& chain);
GaugeData build_potentials(const XLParams& params);

/// Exact identities of the gauge data: U2 == U2_crum, mu'/mu = (2q - p')/(4p)
/// for T0 and T2, and p(zeta) = zeta'^2.
Certificate verify_gauge(const GaugeData& g, const FactorizationChain& chain);

/// psi_n(x) = mu2(zeta(x)) xlaguerre(n)(zeta(x)) sampled at xs.
std::vector<double> eigenfunction_samples(int n, const XLParams& params, std::span<const double> xs);

/// Uniform grid x_i = i h, i = 1..points, h = length / (points + 1), with
/// Dirichlet conditions at x = 0 and x = length.
struct FdGrid {
  double length = 20.0;
  int points = 999;

  double step() const { return length / (points + 1); }
  double x(int i) const { return (i + 1) * step(); }
  /// Same interval, half the step.
  FdGrid refined() const { return {length, 2 * points + 1}; }
};

struct Spectrum {
  FdGrid grid;
  std::vector<double> eigenvalues;
};

/// Lowest `count` eigenvalues of -psi'' + U psi with the 3-point stencil,
/// by Sturm-count bisection on the symmetric tridiagonal matrix.
Spectrum fd_spectrum(const std::function<double(double)>& U, const FdGrid& grid, int count);
Spectrum fd_spectrum(const RatFunc& U, const FdGrid& grid, int count);

struct RefinedSpectrum {
  Spectrum coarse;  // h
  Spectrum fine;    // h/2
  Spectrum finest;  // h/4
  /// log2(|E(h) - E(h/2)| / |E(h/2) - E(h/4)|) per level.
  std::vector<double> observed_order;
  /// Richardson extrapolation E(h/4) + (E(h/4) - E(h/2)) / 3.
  std::vector<double> extrapolated;
};

/// Three-level refinement study. Throws NonConvergence when the successive
/// differences fail to contract for some level.
RefinedSpectrum fd_spectrum_refined(const RatFunc& U, const FdGrid& grid, int count);

nlohmann::json to_json(const Spectrum& s);

/// Evaluates a rational function of x in double precision.
double eval_potential(const RatFunc& U, double x);

}  // namespace xlag
