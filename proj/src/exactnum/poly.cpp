#include "xlag/exactnum/poly.hpp"

#include <ostream>

#include "xlag/errors.hpp"

namespace xlag {

Poly::Poly(const Rat& constant) {
  if (constant != 0) {
    coeffs_.push_back(constant);
    coeffs_.back().canonicalize();
  }
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  v[degree].canonicalize();
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat Poly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

int Poly::valuation() const {
  int j = 0;
  while (j < static_cast<int>(coeffs_.size()) && coeffs_[j] == 0) ++j;
  return coeffs_.empty() ? 0 : j;
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(d));
}

Poly Poly::derivative(unsigned order) const {
  Poly p = *this;
  for (unsigned i = 0; i < order; ++i) p = p.derivative();
  return p;
}

Poly Poly::integral() const {
  if (coeffs_.empty()) return {};
  std::vector<Rat> v(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + 1] = coeffs_[i] / static_cast<unsigned long>(i + 1);
  return Poly(std::move(v));
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::divide_by_z_power(int j) const {
  if (j <= 0) return multiply_by_z_power(-j);
  if (is_zero()) return {};
  if (j > valuation()) throw DivisionError("polynomial not divisible by z^" + std::to_string(j));
  return Poly(std::vector<Rat>(coeffs_.begin() + j, coeffs_.end()));
}

Poly Poly::multiply_by_z_power(int j) const {
  if (j < 0) return divide_by_z_power(-j);
  if (is_zero() || j == 0) return *this;
  std::vector<Rat> v(static_cast<std::size_t>(j));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return *this / leading();
}

std::vector<double> Poly::to_double() const {
  std::vector<double> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.get_d());
  return v;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly& Poly::operator/=(const Rat& c) {
  if (c == 0) throw DivisionError("polynomial divided by zero scalar");
  for (auto& a : coeffs_) a /= c;
  return *this;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionError("division by the zero polynomial");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Poly{}, a};
  std::vector<Rat> quot(static_cast<std::size_t>(da - db + 1));
  const Rat lb = b.leading();
  for (int i = da; i >= db; --i) {
    const Rat c = rem[i] / lb;
    quot[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DivisionError("exact_div: nonzero remainder");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeffs()[i];
    if (c == 0) continue;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    const bool unit = (c == 1);
    if (!unit || i == 0) os << c.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os;
}

}  // namespace xlag
