#pragma once

#include <functional>
#include <vector>

#include "json.hpp"
#include "xlag/density.hpp"
#include "xlag/factorization/chain.hpp"

namespace xlag {

enum class WeightKind { Classical, Exceptional };

/// Classical z^k e^{-z} (k > -1) or exceptional z^k eta12^{-2} e^{-z}
/// (weight-regular parameters with no zero of eta12 on [0, inf)).
struct Weight {
  Rat k;
  WeightKind kind = WeightKind::Classical;
  Poly eta12;

  /// Throws InvalidParams unless k > -1.
  static Weight classical(const Rat& k);
  /// Throws InvalidParams unless the parameters are weight regular and the
  /// Sturm count of eta12 on [0, inf) is zero.
  static Weight exceptional(const XLParams& params);

  Density density() const;
};

/// Composite Gauss-Legendre on [0, radius]: `panels` equal panels of
/// `nodes` points each; the panel at 0 is further split geometrically
/// `grading_levels` times to resolve fractional powers of z. `tol` is
/// relative to the integral of the absolute integrand and bounds both the
/// analytic tail on [radius, inf) and the reported error estimate.
struct QuadConfig {
  double radius = 60.0;
  int panels = 64;
  int nodes = 16;
  double tol = 1e-10;
  int grading_levels = 60;

  /// radius = max(60, 8 n_max), 64 panels of 16 nodes, tol 1e-10.
  static QuadConfig defaults_for(int n_max);
};

struct QuadResult {
  double value = 0.0;
  /// |I(panels) - I(panels/2)| + tail bound + rounding floor.
  double error = 0.0;
  /// Quadrature of |integrand| over [0, radius].
  double abs_integral = 0.0;
  double tail_bound = 0.0;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

/// Composite rule for a generic integrand on [a, b] (grading applied when
/// a == 0). Returns {value, integral of |f|}.
std::pair<double, double> composite_integral(const std::function<double(double)>& f, double a,
                                             double b, int panels, const GaussLegendreRule& rule,
                                             int grading_levels);

/// Upper bound of int_R^inf |num(z)/den(z)| z^power e^{-z} dz, or +inf when
/// the available estimate does not apply at this R.
double tail_bound(const Poly& num, const Poly& den, const Rat& power, double R);

/// int_0^inf f g W dz with error estimate. Throws TailBoundExceeded when the
/// tail bound at cfg.radius is above cfg.tol relative to the integral scale.
QuadResult inner(const Poly& f, const Poly& g, const Weight& w, const QuadConfig& cfg);

/// Gram matrix of a family under a weight; entry (i, j) = <polys_i, polys_j>.
struct Gram {
  std::vector<std::vector<double>> value;
  std::vector<std::vector<double>> error;
};
Gram gram_of(const std::vector<Poly>& polys, const Weight& w, const QuadConfig& cfg);

/// C Gamma(k+n+3-ell) / ((m1-m2)(n-ell)!) evaluated with log-Gamma.
double expected_gram_diagonal(int n, const XLParams& params);

struct GramReport {
  XLParams params;
  int n_min;
  int n_max;
  Gram gram;
  std::vector<double> expected_diagonal;
  std::vector<double> diagonal_rel_error;
  /// max over i != j of |G_ij| / sqrt(G_ii G_jj)
  double max_offdiag_ratio = 0.0;
  double max_diag_rel_error = 0.0;
};

/// Gram matrix of xlaguerre(ell..n_max) under the exceptional weight.
/// Throws InvalidParams unless weight regular.
GramReport gram_matrix(const XLParams& params, int n_max, const QuadConfig& cfg);

nlohmann::json to_json(const GramReport& r);
/// Rows "n,j,value,error"; first line is a '#' metadata header.
std::string to_csv(const GramReport& r);

struct AdjointResult {
  double integral_A = 0.0;  // int_0^R A[f] g W_hat
  double integral_B = 0.0;  // int_0^R B[g] f W
  double boundary = 0.0;    // [b_hat W f g]_0^R
  double residual = 0.0;    // integral_A + integral_B - boundary
  /// residual / max(1, |integral_A| + |integral_B| + |boundary terms|)
  double relative = 0.0;
};

/// Checks int A[f] g W_hat + int B[g] f W = [b_hat W f g] on [0, R].
/// Throws InvalidParams if a denominator vanishes on [0, inf) or the
/// boundary term diverges at 0.
AdjointResult adjoint_boundary_check(const Poly& f, const Poly& g, const FactorizationStep& step,
                                     double R, const QuadConfig& cfg = {});

}  // namespace xlag
