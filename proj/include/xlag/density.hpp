#pragma once

#include "xlag/exactnum/ratfunc.hpp"

namespace xlag {

/// A weight of the form z^power * factor(z) * e^{-z}.
struct Density {
  Rat power = 0;
  RatFunc factor = RatFunc(1);

  /// Moves z-powers of the factor into the exponent.
  Density canonical() const;
  /// W'/W as a rational function.
  RatFunc log_derivative() const;
  /// (z^power factor) at a positive z; the exponential is not included.
  double algebraic_part(double z) const;
  double eval(double z) const;
  /// Density multiplied by a rational function.
  Density times(const RatFunc& f) const { return Density{power, factor * f}.canonical(); }

  friend bool operator==(const Density& a, const Density& b) {
    const Density ca = a.canonical();
    const Density cb = b.canonical();
    return ca.power == cb.power && ca.factor == cb.factor;
  }
};

}  // namespace xlag
