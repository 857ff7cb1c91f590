#include "xlag/factorization/chain.hpp"

#include "xlag/errors.hpp"
#include "xlag/laguerre.hpp"

namespace xlag {

Density classical_density(const Rat& k) { return {k, RatFunc(1)}; }

FactorizationStep make_step(const SecondOrderOp& T, const QuasiRat& phi, const RatFunc& gauge,
                            const Rat& lambda, const Density& W) {
  FactorizationStep s;
  s.T = T;
  s.phi = phi;
  s.gauge = gauge;
  s.lambda = lambda;
  const RatFunc w = phi.log_derivative();
  s.A = FirstOrderOp{gauge, w};
  const RatFunc w_hat = -w - T.q / T.p + gauge.derivative() / gauge;
  s.B = FirstOrderOp{T.p / gauge, w_hat};
  s.T_partner = compose(s.A, s.B).plus(lambda);
  s.W = W.canonical();
  s.W_hat = W.times(s.B.beta / gauge);

  const QuasiRat Tphi = T.apply(phi);
  if (!(Tphi == QuasiRat(phi.shift, phi.body * RatFunc(lambda))))
    throw IdentityFailure("factorization function is not an eigenfunction of T");
  auto BA = [&](const RatFunc& y) { return s.B.apply(s.A.apply(y)) + RatFunc(lambda) * y; };
  auto AB = [&](const RatFunc& y) { return s.A.apply(s.B.apply(y)) + RatFunc(lambda) * y; };
  auto Tact = [&](const RatFunc& y) { return T.apply(y); };
  auto Tpart = [&](const RatFunc& y) { return s.T_partner.apply(y); };
  if (!agree_on_monomials(Tact, BA, 2)) throw IdentityFailure("T != B A + lambda");
  if (!agree_on_monomials(Tpart, AB, 2)) throw IdentityFailure("T_partner != A B + lambda");
  return s;
}

FactorizationStep make_step1(const XLParams& params) {
  const Rat& k = params.k();
  const Poly e1 = eta(1, params);
  const QuasiRat phi1(-k - 2, RatFunc(e1));
  return make_step(classical_operator(k + 2), phi1, RatFunc(Poly::z() * e1), params.lambda1(),
                   classical_density(k + 2));
}

FactorizationStep make_step2(const XLParams& params, const FactorizationStep& step1) {
  const Rat& k = params.k();
  const Poly e1 = eta(1, params);
  const Poly e12 = eta12(params);
  const QuasiRat phi2(-k - 2, RatFunc(eta(2, params)));
  const QuasiRat phi12 = step1.A.apply(phi2);
  if (!(phi12 == QuasiRat(-k - 1, RatFunc(e12))))
    throw IdentityFailure("A1[phi2] != z^{-k-1} eta12");
  return make_step(step1.T_partner, phi12, RatFunc(Poly::z() * e12, e1), params.lambda2(),
                   step1.W_hat);
}

FactorizationChain make_chain(const XLParams& params) {
  FactorizationChain c{make_step1(params), {}};
  c.step2 = make_step2(params, c.step1);
  return c;
}

SecondOrderOp exceptional_operator(const XLParams& params) {
  const Rat& k = params.k();
  const Poly e12 = eta12(params);
  const Poly z = Poly::z();
  const RatFunc q = RatFunc(Poly{k + 1, Rat(-1)}) - RatFunc(z * e12.derivative() * Rat(2), e12);
  const RatFunc r(z * (e12.derivative() + eta12_prime_wronskian(params)) * Rat(2), e12);
  return {RatFunc(z), q, r};
}

}  // namespace xlag
