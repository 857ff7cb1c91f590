#pragma once

#include <complex>
#include <iosfwd>

#include "xlag/exactnum/poly.hpp"

namespace xlag {

/// Quotient num/den of polynomials, kept canonical: gcd(num, den) = 1 and
/// den monic. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rat& c) : num_(c), den_(1) {}   // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(Rat(c)) {}           // NOLINT(google-explicit-constructor)
  /// Throws DivisionError when den is zero.
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Throws NotPolynomial unless the denominator is constant.
  Poly to_poly() const;

  Rat operator()(const Rat& x) const;
  double eval(double x) const;
  std::complex<double> eval(std::complex<double> x) const;

  RatFunc derivative() const;
  /// f(g(z)) for a polynomial g.
  RatFunc compose(const Poly& inner) const;
  RatFunc reciprocal() const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(RatFunc a) { return a *= RatFunc(-1); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

/// Quasi-rational function z^shift * body(z). Used for factorization
/// functions such as z^{-k-2} eta and for operator actions on them. The
/// shift is carried unchanged through differentiation and multiplication
/// by rational functions; comparisons go through canonical().
struct QuasiRat {
  Rat shift = 0;
  RatFunc body;

  QuasiRat() = default;
  QuasiRat(Rat s, RatFunc f) : shift(std::move(s)), body(std::move(f)) {}
  QuasiRat(const RatFunc& f) : body(f) {}  // NOLINT(google-explicit-constructor)

  /// Neither num nor den of the body divisible by z (zero has shift 0).
  QuasiRat canonical() const;
  /// Same function written with the given shift; requires an integer
  /// difference to the current one.
  RatFunc body_at_shift(const Rat& s) const;

  /// d/dz (z^s f) = z^s (f' + s f / z).
  QuasiRat derivative() const;
  /// phi'/phi as a rational function.
  RatFunc log_derivative() const;

  friend QuasiRat operator*(const RatFunc& c, const QuasiRat& q) { return {q.shift, c * q.body}; }
  friend QuasiRat operator+(const QuasiRat& a, const QuasiRat& b);
  friend QuasiRat operator-(const QuasiRat& a, const QuasiRat& b);
  friend bool operator==(const QuasiRat& a, const QuasiRat& b);
};

}  // namespace xlag
