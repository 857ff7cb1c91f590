#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "xlag/factorization/chain.hpp"

namespace xlag {

enum class Status { ExactZero, WithinTol, Failed };

std::string to_string(Status s);

/// Outcome of one identity check. `residual` holds the offending Poly
/// coefficients (exact checks) or complex residuals (numerical checks).
struct Certificate {
  std::string identity;
  XLParams params;
  std::optional<int> n;
  Status status = Status::Failed;
  nlohmann::json residual;
  nlohmann::json extra;

  bool passed() const { return status != Status::Failed; }
};

nlohmann::json params_to_json(const XLParams& params);
nlohmann::json to_json(const Certificate& c);

/// Throws IdentityFailure carrying the certificate's JSON when it failed.
void require(const Certificate& c);

/// eta12 * (Lhat_k[y] - (2 ell - n) y) as an exact polynomial.
Poly eigen_residual(const Poly& y, int n, const XLParams& params);

/// Exceptional eigen-equation for y = xlaguerre(n).
Certificate verify_eigen(int n, const XLParams& params);
/// Same check for an arbitrary candidate y (used for negative controls).
Certificate verify_eigen_for(const Poly& y, int n, const XLParams& params);
/// T2[xlaguerre(n)] = (ell - n) xlaguerre(n) through the factorization chain.
Certificate verify_partner_eigen(int n, const XLParams& params, const FactorizationChain& chain);

/// T = B A + lambda, T_partner = A B + lambda on {1, z, z^2}, the partner
/// coefficient law q_hat = q + p' - 2 p b'/b and
/// r_hat = -p (w_hat' + w_hat^2) - q_hat w_hat + lambda, and W'/W = (q - p')/p.
Certificate verify_step(const FactorizationStep& step, const std::string& name,
                        const XLParams& params);

/// One certificate per relation on z^j, j = 0..N:
/// A1 T0 = T1 A1, T0 B1 = B1 T1, A2 T1 = T2 A2, T1 B2 = B2 T2,
/// T2 A2 A1 = A2 A1 T0.
std::vector<Certificate> verify_intertwining(const XLParams& params, int N,
                                             const FactorizationChain& chain);

/// A2[A1[z^j]] = z^{-k} W[eta1, eta2, z^{k+2} z^j] for j = 0..N.
Certificate verify_composite_A(const XLParams& params, int N, const FactorizationChain& chain);

/// Lhat_k = T2 + ell on {1, z, z^2}, together with both closed forms of r2:
/// z eta12''/eta12 + (z - k) eta12'/eta12 and (2z/eta12)(eta12' + W[eta1',eta2']) - ell.
Certificate verify_exceptional_operator(const XLParams& params, const FactorizationChain& chain);

/// Exact zero residual of the first-order equation of eta12.
Certificate verify_eta12_ode(const XLParams& params);

/// Sturm count of nonnegative real roots of eta12. Passes when the count
/// is 0 and eta12(0) != 0; records the observed sign of eta12 on [0, inf).
Certificate sturm_certificate(const XLParams& params);

struct ConstraintReport {
  std::vector<std::complex<double>> roots;
  std::vector<std::complex<double>> residuals;
  std::vector<double> relative;
  double max_relative = 0.0;
  bool passes = false;
};

/// Evaluates -2 z_i y'(z_i) + (z_i - k + z_i eta12''(z_i)/eta12'(z_i)) y(z_i) at
/// every root z_i of eta12, normalized by max(1, |y(z_i)|, |z_i y'(z_i)|).
/// Throws MultipleRoot when |eta12'(z_i)| is below tol relative to the
/// derivative's coefficient scale at z_i.
ConstraintReport constraint_check(const Poly& y, const XLParams& params, double tol = 1e-8);
Certificate constraint_certificate(const Poly& y, int n, const XLParams& params, double tol = 1e-8);

}  // namespace xlag
