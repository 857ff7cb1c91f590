#pragma once

#include "xlag/exactnum/ratfunc.hpp"

namespace xlag {

/// y -> p y'' + q y' + r y with rational-function coefficients.
struct SecondOrderOp {
  RatFunc p;
  RatFunc q;
  RatFunc r;

  RatFunc apply(const RatFunc& y) const;
  QuasiRat apply(const QuasiRat& y) const;

  /// this + c (the constant c acting by multiplication).
  SecondOrderOp plus(const Rat& c) const { return {p, q, r + RatFunc(c)}; }
};

/// y -> beta (y' - w y).
struct FirstOrderOp {
  RatFunc beta;
  RatFunc w;

  RatFunc apply(const RatFunc& y) const;
  QuasiRat apply(const QuasiRat& y) const;
};

/// Coefficients of outer o inner, i.e. y -> outer[inner[y]].
SecondOrderOp compose(const FirstOrderOp& outer, const FirstOrderOp& inner);

/// The monomials 1, z, ..., z^n as rational functions.
std::vector<RatFunc> monomial_basis(int n);

/// True when a[z^j] == b[z^j] for j = 0..n. For operators of order <= n
/// this determines every coefficient function.
template <class OpA, class OpB>
bool agree_on_monomials(const OpA& a, const OpB& b, int n) {
  for (const auto& y : monomial_basis(n))
    if (!(a(y) == b(y))) return false;
  return true;
}

}  // namespace xlag
