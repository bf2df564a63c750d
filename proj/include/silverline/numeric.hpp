#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace silverline {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p", "0.125", "1e-20" or "3.5E+2" into an exact rational.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

/// Always "p/q", denominator 1 included.
std::string to_fraction_string(const Rational& value);
std::string to_string(const BigInt& value);

/// 2^-k as an exact rational.
Rational dyadic(long k);

Rational abs(const Rational& value);
int sign(const Rational& value);
int sign(const BigInt& value);

/// Decimal expansion truncated toward zero at `digits` fractional digits.
/// Returns nullopt when the truncation of lo and hi differ, i.e. the
/// interval is too wide to decide the printed digits.
std::optional<std::string> truncated_decimal(const Rational& lo, const Rational& hi, int digits);

/// Exact decimal string when value is an integer, otherwise truncated.
std::string truncated_decimal(const Rational& value, int digits);

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  /// +1 / -1 if the whole interval lies strictly on one side of zero, else 0.
  int certain_sign() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& a, const Interval& b);
bool intersects(const Interval& a, const Interval& b);

}  // namespace silverline
