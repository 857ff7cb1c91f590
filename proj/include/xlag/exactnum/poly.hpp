#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "xlag/exactnum/rat.hpp"

namespace xlag {

/// Dense univariate polynomial in z with exact rational coefficients,
/// lowest power first. The zero polynomial stores no coefficients; any
/// other polynomial has a nonzero last coefficient.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

  /// c z^degree
  static Poly monomial(const Rat& c, std::size_t degree);
  /// The identity polynomial z.
  static Poly z() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of z^i (zero past the degree).
  Rat coeff(std::size_t i) const;
  /// Zero for the zero polynomial.
  Rat leading() const;
  /// Largest j with z^j | p; 0 for the zero polynomial.
  int valuation() const;

  Rat operator()(const Rat& x) const;
  double eval(double x) const;
  std::complex<double> eval(std::complex<double> x) const;

  Poly derivative() const;
  Poly derivative(unsigned order) const;
  /// Antiderivative with zero constant term.
  Poly integral() const;
  /// p(q(z)).
  Poly compose(const Poly& inner) const;
  /// p / z^j; requires j <= valuation().
  Poly divide_by_z_power(int j) const;
  Poly multiply_by_z_power(int j) const;
  Poly monic() const;

  std::vector<double> to_double() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rat& c);
  Poly& operator/=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, int c) { return a *= Rat(c); }
  friend Poly operator*(int c, Poly a) { return a *= Rat(c); }
  friend Poly operator/(Poly a, const Rat& c) { return a /= c; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Euclidean division: a = q b + r with deg r < deg b. b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b, throwing DivisionError when the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd over Q; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Human-readable form such as "-1/2*z^2 - 3*z - 3".
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace xlag
