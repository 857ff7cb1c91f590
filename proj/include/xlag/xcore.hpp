#pragma once

#include "xlag/exactnum/poly.hpp"
#include "xlag/exactnum/shifted_poly.hpp"

namespace xlag {

/// Parameters (k, m1, m2) of a two-step exceptional Laguerre family, with
/// the derived codimension ell = m1 + m2 - 1 and factorization eigenvalues
/// lambda_i = k + 2 - m_i. Construction validates 0 <= m1 < m2.
class XLParams {
 public:
  /// Throws InvalidParams when 0 <= m1 < m2 fails.
  XLParams(Rat k, int m1, int m2);

  const Rat& k() const { return k_; }
  int m1() const { return m1_; }
  int m2() const { return m2_; }
  int ell() const { return m1_ + m2_ - 1; }
  Rat lambda1() const { return k_ + 2 - m1_; }
  Rat lambda2() const { return k_ + 2 - m2_; }
  /// k > m2 - 2: the hypothesis under which eta12 has no zero on [0, inf)
  /// and the exceptional weight is integrable.
  bool weight_regular() const { return k_ > m2_ - 2; }

  /// Throws InvalidParams unless n >= ell, and PoleInC if a linear factor
  /// of the normalization constant vanishes at n.
  void require_index(int n) const;

  friend bool operator==(const XLParams&, const XLParams&) = default;

 private:
  Rat k_;
  int m1_;
  int m2_;
};

/// eta_a = L_{m_a}^(-k-2), a in {1, 2}.
Poly eta(int a, const XLParams& params);

/// eta12 = W[eta1, eta2]; degree exactly ell. Throws DegenerateParams if it
/// vanishes identically.
Poly eta12(const XLParams& params);

/// W[eta1', eta2'].
Poly eta12_prime_wronskian(const XLParams& params);

/// Residual z eta12' - (k+1+z) eta12 + (m2-m1) eta1 eta2 of the first-order
/// equation satisfied by eta12 (zero for every valid parameter set).
Poly eta12_ode_residual(const XLParams& params);

/// Normalization constant ((m1-m2)(lambda1 + n - ell)(lambda2 + n - ell))^{-1}.
/// With this constant the polynomials have leading coefficient
/// (-1)^n / ((n-ell)! m1! m2!) and squared norm C Gamma(k+n+3-ell)/((m1-m2)(n-ell)!).
/// Throws PoleInC when a factor vanishes.
Rat norm_constant_C(int n, const XLParams& params);

/// z^{-k} W[eta1, eta2, z^{k+2} y] for a polynomial y, as a shifted polynomial
/// in canonical form (nonnegative integer shift whenever it is polynomial).
ShiftedPoly two_step_wronskian(const Poly& y, const XLParams& params);

/// The exceptional polynomial C z^{-k} W[eta1, eta2, z^{k+2} L_{n-ell}^(k+2)],
/// n >= ell. Throws NotPolynomial if the canonical shift is nonzero.
Poly xlaguerre(int n, const XLParams& params);

/// (-1)^n / ((n-ell)! m1! m2!)
Rat expected_leading_coefficient(int n, const XLParams& params);

/// Type-II exceptional polynomial z^{-k} W[L_m^(-k-1), z^{k+1} L_{n-m}^(k+1)],
/// degree n, n >= m >= 1.
Poly type2_xlaguerre(int n, int m, const Rat& k);

/// The exact rational c with type2_xlaguerre(n, m, k) = c * xlaguerre(n)
/// for params (k, 0, m+1). Throws IdentityFailure if the two are not
/// proportional.
Rat type2_ratio(int n, int m, const Rat& k);

/// -1 / (C (k + 2 + n - m)), the closed form of type2_ratio.
Rat type2_ratio_closed_form(int n, int m, const Rat& k);

}  // namespace xlag
