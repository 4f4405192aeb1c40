#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace partcat {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rat = mpq_class;

/// Parses "3", "-2", "7/20", "0.35", ".5" or "1e-3" into an exact rational.
/// Decimal strings are read digit by digit, never through a double.
Rat parse_rat(std::string_view text);

/// Lowest-terms "p/q" form; integers render as "p/1" so the shape is uniform.
std::string to_fraction_string(const Rat& value);

/// Rounded decimal rendering with `digits` places after the point.
std::string to_decimal_string(const Rat& value, int digits);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// a/b, or nullopt when b == 0 (the caller decides what an infinite ratio means).
inline std::optional<Rat> ratio(const Rat& a, const Rat& b) {
  if (sgn(b) == 0) return std::nullopt;
  return Rat(a / b);
}

}  // namespace partcat
