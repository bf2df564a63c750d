#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "silverline/numeric.hpp"

namespace silverline {

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients and degree -1.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial monomial(int degree, Coeff c = Coeff(1)) {
    std::vector<Coeff> v(static_cast<size_t>(degree) + 1, Coeff(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  /// Coefficient of x^k; zero beyond the degree.
  Coeff operator[](int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<size_t>(k)] : Coeff(0);
  }
  Coeff leading() const { return coeffs_.empty() ? Coeff(0) : coeffs_.back(); }

  template <class X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Coeff> v;
    for (size_t k = 1; k < coeffs_.size(); ++k) v.push_back(coeffs_[k] * Coeff(static_cast<long>(k)));
    return Polynomial(std::move(v));
  }

  /// P(X^d).
  Polynomial compose_power(int d) const {
    if (coeffs_.empty()) return {};
    std::vector<Coeff> v(static_cast<size_t>(degree() * d) + 1, Coeff(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) v[k * static_cast<size_t>(d)] = coeffs_[k];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
    for (size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Coeff> v(a.coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Coeff& c, const Polynomial& p) {
    std::vector<Coeff> v(p.coeffs_);
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);
/// Clears denominators and content; the result has positive leading coefficient.
IntPolynomial primitive_part(const RatPolynomial& p);

/// Euclidean division over Q; throws on division by zero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial monic_gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Exact division in Z[x] by a monic divisor; false when the remainder is nonzero.
bool divides_exactly(const IntPolynomial& divisor, const IntPolynomial& dividend, IntPolynomial* quotient = nullptr);

bool is_square_free(const IntPolynomial& p);
/// p / gcd(p, p') as a primitive integer polynomial.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Sign of p at an exact rational point.
int sign_at(const IntPolynomial& p, const Rational& x);
/// Interval enclosure of p over [x.lo, x.hi] by interval Horner evaluation.
Interval evaluate(const RatPolynomial& p, const Interval& x);

/// Sturm sequence p, p', -rem(...), ... over Q.
std::vector<RatPolynomial> sturm_sequence(const IntPolynomial& p);
/// Number of distinct real roots in the half-open interval (lo, hi].
int count_real_roots(const std::vector<RatPolynomial>& sturm, const Rational& lo, const Rational& hi);
int count_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// "x^3 - x^2 - 1" style rendering.
std::string to_string(const IntPolynomial& p, const std::string& var = "x");
std::string to_string(const RatPolynomial& p, const std::string& var = "x");

}  // namespace silverline
