#pragma once

#include <string>
#include <vector>

#include "silverline/numeric.hpp"
#include "silverline/polynomial.hpp"

namespace silverline {

/// Real algebraic number given by a square-free integer polynomial and an
/// isolating interval [lo, hi] with a strict sign change of the polynomial.
class AlgebraicReal {
 public:
  /// Validates square-freeness, the sign change and root uniqueness.
  AlgebraicReal(IntPolynomial defining, Rational lo, Rational hi);

  const IntPolynomial& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Interval interval() const { return {lo_, hi_}; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  double approx() const { return midpoint().get_d(); }

  /// One bisection step.
  AlgebraicReal bisected() const;
  /// Bisects until the width is at most `width`.
  AlgebraicReal refined(const Rational& width) const;

  /// Truncated decimal expansion; refines internally until the digits are decided.
  std::string decimal(int digits) const;

 private:
  struct Unchecked {};
  AlgebraicReal(IntPolynomial defining, Rational lo, Rational hi, int sign_lo, Unchecked);

  IntPolynomial defining_;
  Rational lo_;
  Rational hi_;
  int sign_lo_ = 0;
};

/// Isolating intervals for all real roots of a square-free polynomial, ascending.
std::vector<AlgebraicReal> real_roots(const IntPolynomial& p);

/// Largest real root of a square-free polynomial; throws NotFound if none exists.
AlgebraicReal largest_real_root(const IntPolynomial& p);

/// Sign of (a - b); refines both until their intervals separate. a and b must differ.
int compare_distinct(const AlgebraicReal& a, const AlgebraicReal& b);

}  // namespace silverline
