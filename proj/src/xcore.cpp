#include "xlag/xcore.hpp"

#include "xlag/errors.hpp"
#include "xlag/laguerre.hpp"

namespace xlag {

XLParams::XLParams(Rat k, int m1, int m2) : k_(std::move(k)), m1_(m1), m2_(m2) {
  if (m1 < 0 || m1 >= m2)
    throw InvalidParams("require 0 <= m1 < m2, got m1=" + std::to_string(m1) +
                        ", m2=" + std::to_string(m2));
}

void XLParams::require_index(int n) const {
  if (n < ell())
    throw InvalidParams("index n=" + std::to_string(n) + " below ell=" + std::to_string(ell()));
  const int j = n - ell();
  if (lambda1() + j == 0 || lambda2() + j == 0)
    throw PoleInC("normalization constant has a pole at n=" + std::to_string(n) +
                  ", k=" + to_string(k_));
}

Poly eta(int a, const XLParams& params) {
  if (a != 1 && a != 2) throw InvalidParams("eta index must be 1 or 2");
  return laguerre_poly(static_cast<unsigned>(a == 1 ? params.m1() : params.m2()), -params.k() - 2);
}

Poly eta12(const XLParams& params) {
  Poly w = wronskian({eta(1, params), eta(2, params)});
  if (w.is_zero()) throw DegenerateParams("eta12 vanishes identically");
  return w;
}

Poly eta12_prime_wronskian(const XLParams& params) {
  return wronskian({eta(1, params).derivative(), eta(2, params).derivative()});
}

Poly eta12_ode_residual(const XLParams& params) {
  const Poly e12 = eta12(params);
  return Poly::z() * e12.derivative() - Poly{params.k() + 1, Rat(1)} * e12 +
         eta(1, params) * eta(2, params) * Rat(params.m2() - params.m1());
}

Rat norm_constant_C(int n, const XLParams& params) {
  params.require_index(n);
  const int j = n - params.ell();
  return 1 / (Rat(params.m1() - params.m2()) * (params.lambda1() + j) * (params.lambda2() + j));
}

ShiftedPoly two_step_wronskian(const Poly& y, const XLParams& params) {
  const ShiftedPoly w = wronskian(
      {ShiftedPoly(eta(1, params)), ShiftedPoly(eta(2, params)), ShiftedPoly(params.k() + 2, y)});
  return (ShiftedPoly::power(-params.k()) * w).canonical();
}

Poly xlaguerre(int n, const XLParams& params) {
  const Rat c = norm_constant_C(n, params);
  const Poly base = laguerre_poly(static_cast<unsigned>(n - params.ell()), params.k() + 2);
  return two_step_wronskian(base, params).to_poly() * c;
}

Rat expected_leading_coefficient(int n, const XLParams& params) {
  const Rat sign = (n % 2 == 0) ? 1 : -1;
  return sign / (factorial(static_cast<unsigned>(n - params.ell())) *
                 factorial(static_cast<unsigned>(params.m1())) *
                 factorial(static_cast<unsigned>(params.m2())));
}

Poly type2_xlaguerre(int n, int m, const Rat& k) {
  if (m < 1) throw InvalidParams("type-II family needs m >= 1");
  if (n < m) throw InvalidParams("type-II family needs n >= m");
  const ShiftedPoly w =
      wronskian({ShiftedPoly(laguerre_poly(static_cast<unsigned>(m), -k - 1)),
                 ShiftedPoly(k + 1, laguerre_poly(static_cast<unsigned>(n - m), k + 1))});
  return (ShiftedPoly::power(-k) * w).to_poly();
}

Rat type2_ratio(int n, int m, const Rat& k) {
  const Poly t2 = type2_xlaguerre(n, m, k);
  const Poly xl = xlaguerre(n, XLParams(k, 0, m + 1));
  if (xl.is_zero()) throw IdentityFailure("exceptional polynomial vanishes");
  const Rat c = t2.leading() / xl.leading();
  if (!(t2 == xl * c)) throw IdentityFailure("type-II and two-step polynomials are not proportional");
  return c;
}

Rat type2_ratio_closed_form(int n, int m, const Rat& k) {
  const XLParams params(k, 0, m + 1);
  return Rat(-1) / (norm_constant_C(n, params) * (k + 2 + n - m));
}

}  // namespace xlag
