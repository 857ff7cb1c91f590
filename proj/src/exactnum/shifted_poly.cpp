#include "xlag/exactnum/shifted_poly.hpp"

#include <numeric>
#include <vector>

#include "xlag/errors.hpp"

namespace xlag {

ShiftedPoly ShiftedPoly::canonical() const {
  if (body.is_zero()) return {};
  const int v = body.valuation();
  return {shift + v, body.divide_by_z_power(v)};
}

bool ShiftedPoly::is_polynomial() const {
  if (body.is_zero()) return true;
  const ShiftedPoly c = canonical();
  return is_integer(c.shift) && c.shift >= 0;
}

Poly ShiftedPoly::to_poly() const {
  const ShiftedPoly c = canonical();
  if (c.is_zero()) return {};
  if (!c.is_polynomial()) throw NotPolynomial("shifted polynomial has exponent " + to_string(c.shift));
  return c.body.multiply_by_z_power(static_cast<int>(c.shift.get_num().get_si()));
}

ShiftedPoly ShiftedPoly::derivative() const {
  return {shift - 1, body * shift + Poly::z() * body.derivative()};
}

ShiftedPoly& ShiftedPoly::operator*=(const ShiftedPoly& rhs) {
  shift += rhs.shift;
  body *= rhs.body;
  return *this;
}

ShiftedPoly& ShiftedPoly::operator*=(const Rat& c) {
  body *= c;
  return *this;
}

namespace {

ShiftedPoly combine(const ShiftedPoly& a, const ShiftedPoly& b, const Rat& sign) {
  if (a.is_zero()) return {b.shift, b.body * sign};
  if (b.is_zero()) return a;
  const Rat diff = a.shift - b.shift;
  if (!is_integer(diff))
    throw InvalidParams("cannot add z-powers with non-integer exponent difference");
  const int d = static_cast<int>(diff.get_num().get_si());
  if (d >= 0) return {b.shift, a.body.multiply_by_z_power(d) + b.body * sign};
  return {a.shift, a.body + b.body.multiply_by_z_power(-d) * sign};
}

}  // namespace

ShiftedPoly operator+(const ShiftedPoly& a, const ShiftedPoly& b) { return combine(a, b, 1); }
ShiftedPoly operator-(const ShiftedPoly& a, const ShiftedPoly& b) { return combine(a, b, -1); }

bool operator==(const ShiftedPoly& a, const ShiftedPoly& b) {
  const ShiftedPoly ca = a.canonical();
  const ShiftedPoly cb = b.canonical();
  return ca.shift == cb.shift && ca.body == cb.body;
}

namespace {

// Laplace expansion along the first row; entries[i][j] is f_j^{(i)} with
// shift s_j - i, so every product in the expansion has the same shift and
// the bodies can be added directly.
Poly determinant_body(const std::vector<std::vector<ShiftedPoly>>& entries, std::vector<int>& rows,
                      std::vector<int>& cols) {
  if (rows.empty()) return Poly(1);
  const int row = rows.front();
  rows.erase(rows.begin());
  Poly acc;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const int col = cols[c];
    const Poly& entry = entries[row][col].body;
    if (entry.is_zero()) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
    Poly minor = determinant_body(entries, rows, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), col);
    if (c % 2 == 0)
      acc += entry * minor;
    else
      acc -= entry * minor;
  }
  rows.insert(rows.begin(), row);
  return acc;
}

}  // namespace

ShiftedPoly wronskian(std::span<const ShiftedPoly> fs) {
  const std::size_t d = fs.size();
  if (d == 0) return ShiftedPoly(Poly(1));
  std::vector<std::vector<ShiftedPoly>> entries(d, std::vector<ShiftedPoly>(d));
  for (std::size_t j = 0; j < d; ++j) {
    entries[0][j] = fs[j];
    for (std::size_t i = 1; i < d; ++i) entries[i][j] = entries[i - 1][j].derivative();
  }
  std::vector<int> rows(d);
  std::vector<int> cols(d);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  Rat shift = 0;
  for (const auto& f : fs) shift += f.shift;
  shift -= Rat(static_cast<long>(d * (d - 1) / 2));
  return ShiftedPoly(shift, determinant_body(entries, rows, cols)).canonical();
}

ShiftedPoly wronskian(std::initializer_list<ShiftedPoly> fs) {
  return wronskian(std::span<const ShiftedPoly>(fs.begin(), fs.size()));
}

Poly wronskian(std::span<const Poly> fs) {
  std::vector<ShiftedPoly> lifted(fs.begin(), fs.end());
  return wronskian(std::span<const ShiftedPoly>(lifted)).to_poly();
}

Poly wronskian(std::initializer_list<Poly> fs) {
  return wronskian(std::span<const Poly>(fs.begin(), fs.size()));
}

}  // namespace xlag
