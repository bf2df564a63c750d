#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "silverline/algebraic_real.hpp"
#include "silverline/polynomial.hpp"

namespace silverline {

/// X^N - b_1 X^{N-1} - ... - b_N with bits b_j in {0,1}, b_N = 1 and at
/// least two nonzero bits.
class SilverPolynomial {
 public:
  /// bits[j-1] = b_j.
  explicit SilverPolynomial(std::vector<int> bits);
  /// Parses "b_1...b_N", e.g. "101" for x^3 - x^2 - 1.
  static SilverPolynomial from_bits(std::string_view bits);
  static SilverPolynomial distinguished(int n);
  /// nullopt when p is not a silver polynomial.
  static std::optional<SilverPolynomial> from_polynomial(const IntPolynomial& p);

  int degree() const { return static_cast<int>(bits_.size()); }
  const std::vector<int>& bits() const { return bits_; }
  int bit(int j) const { return bits_[static_cast<size_t>(j - 1)]; }
  /// Indices j with b_j = 1, ascending.
  std::vector<int> support() const;
  bool is_distinguished() const;
  std::string bit_string() const;
  IntPolynomial polynomial() const;

  friend bool operator==(const SilverPolynomial& a, const SilverPolynomial& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<int> bits_;
};

/// All silver polynomials of degree N in lexicographic order of (b_1..b_N).
std::vector<SilverPolynomial> enumerate_silver_polynomials(int n);

/// Largest positive root, isolated by bisection from [1, 2] to width <= width.
/// The defining polynomial is the square-free part of P.
AlgebraicReal silver_number(const SilverPolynomial& p, const Rational& width);

/// The two lower bounds 2 - 1/N and 2 - 1/(3N) for rho_N, checked exactly.
struct LowerBoundReport {
  int n = 0;
  bool two_minus_inverse_n = false;
  bool two_minus_inverse_3n = false;
};
LowerBoundReport distinguished_lower_bounds(int n);

}  // namespace silverline
