#pragma once

#include <span>

#include "xlag/exactnum/poly.hpp"

namespace xlag {

/// The function z^shift * body(z) with a rational exponent. Arithmetic keeps
/// the stored shift as given; canonical() absorbs any factor z^j of the body
/// into the shift so that "is a polynomial" becomes a nonnegative integer
/// canonical shift.
struct ShiftedPoly {
  Rat shift = 0;
  Poly body;

  ShiftedPoly() = default;
  ShiftedPoly(Rat s, Poly p) : shift(std::move(s)), body(std::move(p)) {}
  ShiftedPoly(const Poly& p) : body(p) {}  // NOLINT(google-explicit-constructor)

  static ShiftedPoly power(const Rat& s) { return {s, Poly(1)}; }

  /// Body has nonzero constant term (or is zero, in which case shift = 0).
  ShiftedPoly canonical() const;
  bool is_zero() const { return body.is_zero(); }
  /// True when the canonical shift is a nonnegative integer.
  bool is_polynomial() const;
  /// The polynomial value; throws NotPolynomial unless is_polynomial().
  Poly to_poly() const;

  /// d/dz (z^s p) = z^{s-1} (s p + z p'), returned with shift s-1.
  ShiftedPoly derivative() const;

  ShiftedPoly& operator*=(const ShiftedPoly& rhs);
  ShiftedPoly& operator*=(const Rat& c);
  friend ShiftedPoly operator*(ShiftedPoly a, const ShiftedPoly& b) { return a *= b; }
  friend ShiftedPoly operator*(ShiftedPoly a, const Rat& c) { return a *= c; }

  /// Sum of two shifted polynomials whose shifts differ by an integer;
  /// throws InvalidParams otherwise. The result carries the smaller shift.
  friend ShiftedPoly operator+(const ShiftedPoly& a, const ShiftedPoly& b);
  friend ShiftedPoly operator-(const ShiftedPoly& a, const ShiftedPoly& b);

  /// Equality of the represented functions.
  friend bool operator==(const ShiftedPoly& a, const ShiftedPoly& b);
};

/// Wronskian det[f_j^{(i)}] of d functions. Before canonicalization the
/// result carries shift sum(s_j) - d(d-1)/2; it is returned canonical.
ShiftedPoly wronskian(std::span<const ShiftedPoly> fs);
ShiftedPoly wronskian(std::initializer_list<ShiftedPoly> fs);
/// Wronskian of plain polynomials.
Poly wronskian(std::span<const Poly> fs);
Poly wronskian(std::initializer_list<Poly> fs);

}  // namespace xlag
