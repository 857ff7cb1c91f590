#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace xlag {

/// Exact rational scalar. GMP keeps it canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" with decimal integers p, q (q != 0).
/// Decimal points and exponents are rejected so that every parameter
/// stays exact. Throws InvalidParams on malformed input.
Rat parse_rat(std::string_view text);

/// Always "num/den", e.g. "3/1", "-1/20".
std::string to_string(const Rat& value);

bool is_integer(const Rat& value);

Rat factorial(unsigned n);

/// Rising factorial (x)_n = x (x+1) ... (x+n-1).
Rat pochhammer(const Rat& x, unsigned n);

}  // namespace xlag
