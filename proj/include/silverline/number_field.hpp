#pragma once

#include <memory>
#include <string>
#include <vector>

#include "silverline/algebraic_real.hpp"
#include "silverline/numeric.hpp"
#include "silverline/polynomial.hpp"

namespace silverline {

class FieldElement;

/// Q[X]/(P) for a monic irreducible integer polynomial P. Cheap to copy.
class NumberField {
 public:
  /// Throws ReducibleModulus when P factors over Q.
  explicit NumberField(const IntPolynomial& modulus);

  const IntPolynomial& modulus() const { return data_->modulus; }
  int degree() const { return data_->modulus.degree(); }

  FieldElement zero() const;
  FieldElement one() const;
  /// The class of X.
  FieldElement generator() const;
  FieldElement from_rational(const Rational& value) const;
  /// Coordinates lowest power first; shorter vectors are zero-padded.
  FieldElement element(std::vector<Rational> coords) const;
  /// Reduces an arbitrary polynomial in X modulo P.
  FieldElement reduce(const RatPolynomial& p) const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.data_ == b.data_ || a.data_->modulus == b.data_->modulus;
  }

 private:
  friend class FieldElement;
  struct Data {
    IntPolynomial modulus;
    /// Coordinates of X^(N+k) for k = 0..N-2.
    std::vector<std::vector<Rational>> high_powers;
  };
  NumberField() = default;
  std::shared_ptr<const Data> data_;
};

class FieldElement {
 public:
  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  /// The coordinates as a polynomial in X.
  RatPolynomial as_polynomial() const { return RatPolynomial(coords_); }
  /// True when every coordinate is an integer.
  bool is_integral() const;

  FieldElement inverse() const;
  FieldElement pow(long exponent) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const Rational& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  /// Exact equality; throws IncompatibleField across fields.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  friend class NumberField;
  FieldElement(NumberField field, std::vector<Rational> coords);
  NumberField field_;
  std::vector<Rational> coords_;
};

/// Sign of the real number obtained by substituting `root` for X.
/// Requires root.defining() to equal the field modulus.
int field_sign(const FieldElement& a, const AlgebraicReal& root);

/// Enclosure of the value of a at root.
Interval field_interval(const FieldElement& a, const AlgebraicReal& root);

/// Truncated decimal expansion of the value at root.
std::string field_decimal(const FieldElement& a, const AlgebraicReal& root, int digits);

/// Floating-point approximation of the value at root.
double field_approx(const FieldElement& a, const AlgebraicReal& root);

/// Minimal polynomial of rho^d, where rho is a root of the irreducible monic P.
IntPolynomial minimal_polynomial_of_power(const IntPolynomial& p, int d);

/// Minimal polynomial over Q of a field element, monic with rational coefficients
/// scaled to a primitive integer polynomial.
IntPolynomial minimal_polynomial(const FieldElement& a);

/// Coordinates rendered as "[c0, c1, ...]" with exact "p/q" strings.
std::vector<std::string> coord_strings(const FieldElement& a);

}  // namespace silverline
