#include "silverline/silver.hpp"

#include "silverline/error.hpp"

namespace silverline {

SilverPolynomial::SilverPolynomial(std::vector<int> bits) : bits_(std::move(bits)) {
  if (bits_.size() < 2) fail(ErrorCode::InvalidDegree, "silver polynomial needs degree >= 2");
  int ones = 0;
  for (int b : bits_) {
    require(b == 0 || b == 1, ErrorCode::InvalidArgument, "silver bits must be 0 or 1");
    ones += b;
  }
  require(bits_.back() == 1, ErrorCode::InvalidArgument, "silver polynomial needs b_N = 1");
  require(ones > 1, ErrorCode::InvalidArgument, "silver polynomial needs at least two nonzero bits");
}

SilverPolynomial SilverPolynomial::from_bits(std::string_view bits) {
  std::vector<int> v;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') fail(ErrorCode::Parse, "bit string may contain only 0 and 1");
    v.push_back(ch - '0');
  }
  return SilverPolynomial(std::move(v));
}

SilverPolynomial SilverPolynomial::distinguished(int n) {
  if (n < 2) fail(ErrorCode::InvalidDegree, "distinguished silver polynomial needs N >= 2");
  return SilverPolynomial(std::vector<int>(static_cast<size_t>(n), 1));
}

std::optional<SilverPolynomial> SilverPolynomial::from_polynomial(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 2 || !p.is_monic()) return std::nullopt;
  std::vector<int> bits;
  int ones = 0;
  for (int j = 1; j <= n; ++j) {
    const BigInt c = p[n - j];
    if (c != 0 && c != -1) return std::nullopt;
    bits.push_back(c == -1 ? 1 : 0);
    ones += bits.back();
  }
  if (bits.back() != 1 || ones < 2) return std::nullopt;
  return SilverPolynomial(std::move(bits));
}

std::vector<int> SilverPolynomial::support() const {
  std::vector<int> out;
  for (int j = 1; j <= degree(); ++j) {
    if (bit(j)) out.push_back(j);
  }
  return out;
}

bool SilverPolynomial::is_distinguished() const {
  for (int b : bits_) {
    if (!b) return false;
  }
  return true;
}

std::string SilverPolynomial::bit_string() const {
  std::string s;
  for (int b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

IntPolynomial SilverPolynomial::polynomial() const {
  const int n = degree();
  std::vector<BigInt> c(static_cast<size_t>(n) + 1, BigInt(0));
  c[static_cast<size_t>(n)] = 1;
  for (int j = 1; j <= n; ++j) c[static_cast<size_t>(n - j)] = -bit(j);
  return IntPolynomial(std::move(c));
}

std::vector<SilverPolynomial> enumerate_silver_polynomials(int n) {
  if (n < 2) fail(ErrorCode::InvalidDegree, "silver polynomials need N >= 2, got " + std::to_string(n));
  require(n <= 30, ErrorCode::UnsupportedDegree, "enumeration limited to N <= 30");
  std::vector<SilverPolynomial> out;
  const unsigned long count = 1UL << (n - 1);
  for (unsigned long mask = 1; mask < count; ++mask) {
    // mask holds b_1..b_{N-1}, b_1 most significant.
    std::vector<int> bits;
    for (int j = 1; j < n; ++j) bits.push_back(static_cast<int>((mask >> (n - 1 - j)) & 1UL));
    bits.push_back(1);
    out.emplace_back(std::move(bits));
  }
  return out;
}

AlgebraicReal silver_number(const SilverPolynomial& p, const Rational& width) {
  return AlgebraicReal(square_free_part(p.polynomial()), Rational(1), Rational(2)).refined(width);
}

LowerBoundReport distinguished_lower_bounds(int n) {
  const auto p = SilverPolynomial::distinguished(n).polynomial();
  // On [1, 2], P(c) <= 0 iff c <= rho.
  LowerBoundReport r;
  r.n = n;
  r.two_minus_inverse_n = sign_at(p, 2 - Rational(1, n)) <= 0;
  r.two_minus_inverse_3n = sign_at(p, 2 - Rational(1, 3 * n)) <= 0;
  return r;
}

}  // namespace silverline
