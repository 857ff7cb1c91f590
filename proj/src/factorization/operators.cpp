#include "xlag/factorization/operators.hpp"

namespace xlag {

RatFunc SecondOrderOp::apply(const RatFunc& y) const {
  const RatFunc d1 = y.derivative();
  return p * d1.derivative() + q * d1 + r * y;
}

QuasiRat SecondOrderOp::apply(const QuasiRat& y) const {
  const QuasiRat d1 = y.derivative();
  const QuasiRat d2 = d1.derivative();
  return {y.shift, p * d2.body + q * d1.body + r * y.body};
}

RatFunc FirstOrderOp::apply(const RatFunc& y) const { return beta * (y.derivative() - w * y); }

QuasiRat FirstOrderOp::apply(const QuasiRat& y) const {
  const QuasiRat d1 = y.derivative();
  return {y.shift, beta * (d1.body - w * y.body)};
}

SecondOrderOp compose(const FirstOrderOp& outer, const FirstOrderOp& inner) {
  // outer[inner[y]] = bo ( (bi y' - bi wi y)' - wo (bi y' - bi wi y) )
  const RatFunc& bo = outer.beta;
  const RatFunc& bi = inner.beta;
  const RatFunc bw = bi * inner.w;
  return {bo * bi, bo * (bi.derivative() - bw - bi * outer.w),
          bo * (outer.w * bw - bw.derivative())};
}

std::vector<RatFunc> monomial_basis(int n) {
  std::vector<RatFunc> basis;
  for (int j = 0; j <= n; ++j) basis.emplace_back(Poly::monomial(1, static_cast<std::size_t>(j)));
  return basis;
}

}  // namespace xlag
