#pragma once

#include "xlag/exactnum/poly.hpp"
#include "xlag/factorization/operators.hpp"

namespace xlag {

/// Generalized Laguerre polynomial L_n^(alpha) for any rational alpha, by the
/// three-term recurrence
///   (n+1) L_{n+1} = (2n + 1 + alpha - z) L_n - (n + alpha) L_{n-1}.
/// Degree exactly n, leading coefficient (-1)^n / n!.
Poly laguerre_poly(unsigned n, const Rat& alpha);

/// The classical operator y -> z y'' + (k + 1 - z) y'.
SecondOrderOp classical_operator(const Rat& k);

/// Same operator applied directly on polynomials.
Poly apply_classical(const Rat& k, const Poly& y);

/// ||L_n^(k)||^2 / ||L_0^(k)||^2 = (k+1)(k+2)...(k+n) / n!.
Rat classical_norm_ratio(unsigned n, const Rat& k);

}  // namespace xlag
