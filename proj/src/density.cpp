#include "xlag/density.hpp"

#include <cmath>

namespace xlag {

Density Density::canonical() const {
  const QuasiRat c = QuasiRat(power, factor).canonical();
  if (c.body.is_zero()) return {power, RatFunc()};
  return {c.shift, c.body};
}

RatFunc Density::log_derivative() const {
  return QuasiRat(power, factor).log_derivative() - RatFunc(1);
}

double Density::algebraic_part(double z) const {
  return std::pow(z, power.get_d()) * factor.eval(z);
}

double Density::eval(double z) const { return algebraic_part(z) * std::exp(-z); }

}  // namespace xlag
