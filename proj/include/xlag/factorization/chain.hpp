#pragma once

#include "xlag/density.hpp"
#include "xlag/factorization/operators.hpp"
#include "xlag/xcore.hpp"

namespace xlag {

/// A rational factorization T = B A + lambda together with its partner
/// T_partner = A B + lambda. A[y] = b (y' - w y) with w = phi'/phi; B has
/// gauge p/b and w_hat = -w - q/p + b'/b. W is the density of T
/// (p^{-1} exp int q/p) and W_hat = (b_hat / b) W that of the partner.
struct FactorizationStep {
  SecondOrderOp T;
  QuasiRat phi;
  RatFunc gauge;
  Rat lambda;
  FirstOrderOp A;
  FirstOrderOp B;
  SecondOrderOp T_partner;
  Density W;
  Density W_hat;
};

/// Builds the step and checks, exactly, T[phi] = lambda phi, T = B A + lambda
/// and T_partner = A B + lambda on {1, z, z^2}. Throws IdentityFailure.
FactorizationStep make_step(const SecondOrderOp& T, const QuasiRat& phi, const RatFunc& gauge,
                            const Rat& lambda, const Density& W);

/// First step: T0 = classical operator with parameter k+2, phi1 = z^{-k-2} eta1,
/// gauge z eta1, eigenvalue lambda1. B1[y] = (y' - y)/eta1.
FactorizationStep make_step1(const XLParams& params);

/// Second step: T1 = partner of step 1, phi12 = A1[phi2] (checked equal to
/// z^{-k-1} eta12), gauge z eta12 / eta1, eigenvalue lambda2.
FactorizationStep make_step2(const XLParams& params, const FactorizationStep& step1);

struct FactorizationChain {
  FactorizationStep step1;
  FactorizationStep step2;
};

FactorizationChain make_chain(const XLParams& params);

/// z y'' + (k+1-z - 2 z eta12'/eta12) y' + (2z/eta12)(eta12' + W[eta1', eta2']) y
SecondOrderOp exceptional_operator(const XLParams& params);

/// Density z^{k+2} e^{-z} of T0.
Density classical_density(const Rat& k);

}  // namespace xlag
