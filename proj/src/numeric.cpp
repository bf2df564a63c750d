#include "silverline/numeric.hpp"

#include <algorithm>
#include <cctype>

#include "silverline/error.hpp"

namespace silverline {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InvalidDegree: return "invalid-degree";
    case ErrorCode::UnsupportedDegree: return "unsupported-degree";
    case ErrorCode::IncompatibleField: return "incompatible-field";
    case ErrorCode::ReducibleModulus: return "reducible-modulus";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::NotFound: return "not-found";
    case ErrorCode::NoDecomposition: return "no-decomposition";
    case ErrorCode::SingularTransform: return "singular-transform";
    case ErrorCode::Incompatible: return "incompatible";
    case ErrorCode::CannotCertify: return "cannot-certify";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) fail(ErrorCode::Parse, "not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) fail(ErrorCode::Parse, "empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    BigInt exp_value = parse_bigint(exp_text);
    if (!exp_value.fits_slong_p()) fail(ErrorCode::Parse, "exponent out of range");
    exponent = exp_value.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      fail(ErrorCode::Parse, "not a number: '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) fail(ErrorCode::Parse, "not a number: '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  Rational r(BigInt(digits, 10));
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    r /= scale;
  } else {
    r *= scale;
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

Rational dyadic(long k) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? Rational(BigInt(1), p) : Rational(p);
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }
int sign(const Rational& value) { return sgn(value); }
int sign(const BigInt& value) { return sgn(value); }

namespace {

// floor(|x| * 10^digits) together with the sign of x, truncating toward zero.
std::pair<bool, BigInt> scaled_truncation(const Rational& x, int digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(x) * scale;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return {x < 0, q};
}

std::string format_scaled(bool negative, const BigInt& q, int digits) {
  std::string s = q.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  if (negative && q != 0) s.insert(0, "-");
  return s;
}

}  // namespace

std::optional<std::string> truncated_decimal(const Rational& lo, const Rational& hi, int digits) {
  if (digits < 0) fail(ErrorCode::InvalidArgument, "digits must be non-negative");
  // Zero inside the interval means the sign itself is undecided unless both
  // truncations are "0.000..." which we handle below.
  auto [neg_lo, q_lo] = scaled_truncation(lo, digits);
  auto [neg_hi, q_hi] = scaled_truncation(hi, digits);
  bool lo_zero = q_lo == 0, hi_zero = q_hi == 0;
  if (lo_zero && hi_zero) return format_scaled(false, BigInt(0), digits);
  if (neg_lo != neg_hi || q_lo != q_hi) return std::nullopt;
  return format_scaled(neg_lo, q_lo, digits);
}

std::string truncated_decimal(const Rational& value, int digits) {
  if (value.get_den() == 1) return value.get_num().get_str();
  auto [negative, q] = scaled_truncation(value, digits);
  return format_scaled(negative, q, digits);
}

int Interval::certain_sign() const {
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  return 0;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator*(const Rational& a, const Interval& b) {
  if (a >= 0) return {a * b.lo, a * b.hi};
  return {a * b.hi, a * b.lo};
}

bool intersects(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

}  // namespace silverline
