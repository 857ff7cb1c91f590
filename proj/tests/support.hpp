#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "xlag/exactnum.hpp"

namespace xlag::testing {

inline Poly random_poly(std::mt19937_64& rng, int degree, int magnitude = 5) {
  std::uniform_int_distribution<int> num(-magnitude, magnitude);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rat> c(degree + 1);
  for (auto& x : c) x = Rat(num(rng), den(rng));
  if (c.back() == 0) c.back() = 1;
  return Poly(c);
}

// Explicit sum L_n^(a) = sum_i (-1)^i binom(n+a, n-i) z^i / i!.
inline Poly laguerre_binomial_sum(unsigned n, const Rat& a) {
  std::vector<Rat> c(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    Rat binom = 1;
    for (unsigned t = 1; t <= n - i; ++t) binom *= (a + i + t) / Rat(t);
    c[i] = binom / factorial(i);
    if (i % 2) c[i] = -c[i];
  }
  return Poly(c);
}

}  // namespace xlag::testing
