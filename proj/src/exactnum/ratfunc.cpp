#include "xlag/exactnum/ratfunc.hpp"

#include <ostream>

#include "xlag/errors.hpp"

namespace xlag {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionError("rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const Rat lc = den_.leading();
  if (lc != 1) {
    num_ /= lc;
    den_ /= lc;
  }
}

Poly RatFunc::to_poly() const {
  if (!is_polynomial()) throw NotPolynomial("rational function has a nonconstant denominator");
  return num_;
}

Rat RatFunc::operator()(const Rat& x) const {
  const Rat d = den_(x);
  if (d == 0) throw DivisionError("rational function evaluated at a pole");
  return num_(x) / d;
}

double RatFunc::eval(double x) const { return num_.eval(x) / den_.eval(x); }

std::complex<double> RatFunc::eval(std::complex<double> x) const {
  return num_.eval(x) / den_.eval(x);
}

RatFunc RatFunc::derivative() const {
  if (is_polynomial()) return RatFunc(num_.derivative());
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RatFunc RatFunc::compose(const Poly& inner) const {
  return {num_.compose(inner), den_.compose(inner)};
}

RatFunc RatFunc::reciprocal() const {
  if (is_zero()) throw DivisionError("reciprocal of the zero rational function");
  return {den_, num_};
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    *this = RatFunc(num_ + rhs.num_, den_);
  } else {
    *this = RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    *this = RatFunc(num_ - rhs.num_, den_);
  } else {
    *this = RatFunc(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  *this = RatFunc(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw DivisionError("division by the zero rational function");
  *this = RatFunc(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  if (f.is_polynomial()) return os << f.num();
  return os << "(" << f.num() << ")/(" << f.den() << ")";
}

QuasiRat QuasiRat::canonical() const {
  if (body.is_zero()) return {};
  const int vn = body.num().valuation();
  const int vd = body.den().valuation();
  return {shift + (vn - vd),
          RatFunc(body.num().divide_by_z_power(vn), body.den().divide_by_z_power(vd))};
}

RatFunc QuasiRat::body_at_shift(const Rat& s) const {
  const Rat diff = shift - s;
  if (!is_integer(diff)) throw InvalidParams("non-integer exponent difference");
  const int d = static_cast<int>(diff.get_num().get_si());
  if (d >= 0) return body * RatFunc(Poly::monomial(1, static_cast<std::size_t>(d)));
  return body / RatFunc(Poly::monomial(1, static_cast<std::size_t>(-d)));
}

QuasiRat QuasiRat::derivative() const {
  if (shift == 0) return {shift, body.derivative()};
  return {shift, body.derivative() + body * RatFunc(Poly(shift), Poly::z())};
}

RatFunc QuasiRat::log_derivative() const {
  RatFunc d = body.derivative() / body;
  if (shift != 0) d += RatFunc(Poly(shift), Poly::z());
  return d;
}

QuasiRat operator+(const QuasiRat& a, const QuasiRat& b) {
  if (a.body.is_zero()) return b;
  if (b.body.is_zero()) return a;
  return {a.shift, a.body + b.body_at_shift(a.shift)};
}

QuasiRat operator-(const QuasiRat& a, const QuasiRat& b) {
  if (b.body.is_zero()) return a;
  if (a.body.is_zero()) return {b.shift, -b.body};
  return {a.shift, a.body - b.body_at_shift(a.shift)};
}

bool operator==(const QuasiRat& a, const QuasiRat& b) {
  const QuasiRat ca = a.canonical();
  const QuasiRat cb = b.canonical();
  return ca.shift == cb.shift && ca.body == cb.body;
}

}  // namespace xlag
