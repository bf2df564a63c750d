#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "silverline/algebraic_real.hpp"
#include "silverline/number_field.hpp"
#include "silverline/silver.hpp"

namespace silverline {

/// sum c_i sigma^{n-i} with bits c_0..c_n stored highest power first.
/// Leading zeros are trimmed; the empty representation is zero, of degree -1.
class SigmaInt {
 public:
  SigmaInt() = default;
  explicit SigmaInt(std::vector<std::uint8_t> bits);
  /// "1011"; "" and "0" denote zero.
  static SigmaInt parse(std::string_view text);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  int degree() const { return static_cast<int>(bits_.size()) - 1; }
  bool is_zero() const { return bits_.empty(); }
  /// Coefficient of sigma^k; zero outside the stored range.
  int coefficient(int k) const;
  /// Bit string; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const SigmaInt& a, const SigmaInt& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const SigmaInt& a, const SigmaInt& b) {
    if (a.bits_.size() != b.bits_.size()) return a.bits_.size() < b.bits_.size();
    return a.bits_ < b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

/// A representation in which no N consecutive coefficients are all 1.
class NormalForm {
 public:
  /// Throws Precondition when rep is not in normal form for window n.
  NormalForm(SigmaInt rep, int n);

  const SigmaInt& rep() const { return rep_; }
  int window() const { return n_; }
  int degree() const { return rep_.degree(); }
  std::string to_string() const { return rep_.to_string(); }

  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.n_ == b.n_ && a.rep_ == b.rep_; }

 private:
  SigmaInt rep_;
  int n_;
};

/// A silver number with its number field and a narrow isolating interval.
struct SilverBase {
  SilverPolynomial poly;
  NumberField field;
  AlgebraicReal root;
  FieldElement rho;
  FieldElement rho_inverse;

  /// Requires an irreducible silver polynomial.
  static SilverBase make(const SilverPolynomial& p);
  static SilverBase distinguished(int n) { return make(SilverPolynomial::distinguished(n)); }
  int degree() const { return poly.degree(); }
};

/// Exact value in Q(sigma).
FieldElement value_of(const SigmaInt& x, const NumberField& field);
inline FieldElement value_of(const SigmaInt& x, const SilverBase& base) { return value_of(x, base.field); }
/// Interval value for bases whose polynomial may be reducible.
Interval value_interval(const SigmaInt& x, const AlgebraicReal& sigma);

/// Multiplication by sigma.
SigmaInt inflate(const SigmaInt& x);

bool is_normal_form(const SigmaInt& x, int n);

/// Value-preserving carry rho^{m+1} = rho^m + ... + rho^{m-N+1} applied at the
/// leftmost all-ones window until none remains. Output degree is n or n+1.
NormalForm to_normal_form(const SigmaInt& x, int n);

/// Degree first, then the first differing coefficient. Windows must match.
int compare(const NormalForm& a, const NormalForm& b);

/// Largest normal form of degree n: blocks of N-1 ones separated by zeros,
/// then (n+1) mod N ones.
NormalForm largest_of_degree(int n, int window);

/// sum_{i=1}^{N-r} rho^{-i}; equals 1 for r = 0.
FieldElement prototile_gap(const SilverBase& base, int r);

struct Successor {
  NormalForm next;
  FieldElement delta;
};

/// Least normal form above x and the exact gap; distinguished bases only.
Successor successor(const NormalForm& x, const SilverBase& base);

/// The first `count` rho-integers in increasing order, starting from zero.
std::vector<NormalForm> enumerate_integers(const SilverBase& base, int count);

struct MinDifference {
  /// Certified enclosure of min |q(rho)| over the scanned nonzero values.
  Interval min_abs;
  /// Coefficients of a minimizing q, lowest degree first.
  std::vector<int> witness;
  long long scanned = 0;
  long long zero_values = 0;
  int degree_bound = 0;
  /// False when the candidate budget stopped the scan early.
  bool complete = true;
};

/// Exhaustive scan of q with coefficients in {-1, 0, 1} and degree <= bound,
/// in lexicographic order of (q_0, ..., q_d) with -1 < 0 < 1.
MinDifference min_difference_scan(const NumberField& field, const AlgebraicReal& root, int degree_bound,
                                  long long budget = 14348907);

}  // namespace silverline
