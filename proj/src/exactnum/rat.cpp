#include "xlag/exactnum/rat.hpp"

#include <cctype>

#include "xlag/errors.hpp"

namespace xlag {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) ||
      den.front() == '-' || den.front() == '+')
    throw InvalidParams("not a rational 'p/q': '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw InvalidParams("zero denominator in '" + std::string(text) + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rat& value) { return value.get_den() == 1; }

Rat factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Rat pochhammer(const Rat& x, unsigned n) {
  Rat acc = 1;
  for (unsigned j = 0; j < n; ++j) acc *= x + j;
  return acc;
}

}  // namespace xlag
