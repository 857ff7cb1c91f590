#include "xlag/laguerre.hpp"

namespace xlag {

Poly laguerre_poly(unsigned n, const Rat& alpha) {
  Poly prev(1);
  if (n == 0) return prev;
  Poly cur{alpha + 1, Rat(-1)};
  for (unsigned j = 1; j < n; ++j) {
    Poly next = (Poly{Rat(2 * j + 1) + alpha, Rat(-1)} * cur - prev * (Rat(j) + alpha)) / Rat(j + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

SecondOrderOp classical_operator(const Rat& k) {
  return {RatFunc(Poly::z()), RatFunc(Poly{k + 1, Rat(-1)}), RatFunc()};
}

Poly apply_classical(const Rat& k, const Poly& y) {
  const Poly d1 = y.derivative();
  return Poly::z() * d1.derivative() + Poly{k + 1, Rat(-1)} * d1;
}

Rat classical_norm_ratio(unsigned n, const Rat& k) { return pochhammer(k + 1, n) / factorial(n); }

}  // namespace xlag
