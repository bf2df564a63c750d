#include "silverline/number_field.hpp"

#include <cmath>
#include <limits>

#include "silverline/error.hpp"
#include "silverline/factorization.hpp"

namespace silverline {

NumberField::NumberField(const IntPolynomial& modulus) {
  require(modulus.degree() >= 1, ErrorCode::InvalidArgument, "modulus must have degree >= 1");
  require(modulus.is_monic(), ErrorCode::InvalidArgument, "modulus must be monic");
  if (!is_irreducible(modulus)) {
    fail(ErrorCode::ReducibleModulus, "modulus " + to_string(modulus) + " is reducible over Q");
  }
  auto data = std::make_shared<Data>();
  data->modulus = modulus;
  const int n = modulus.degree();
  // X^N = -(a_0 + a_1 X + ... + a_{N-1} X^{N-1}).
  std::vector<Rational> cur(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) cur[static_cast<size_t>(k)] = -Rational(modulus[k]);
  for (int e = 0; e + 1 < n; ++e) {
    data->high_powers.push_back(cur);
    std::vector<Rational> next(static_cast<size_t>(n), Rational(0));
    const Rational top = cur.back();
    for (int k = n - 1; k >= 1; --k) next[static_cast<size_t>(k)] = cur[static_cast<size_t>(k - 1)];
    for (int k = 0; k < n; ++k) next[static_cast<size_t>(k)] -= top * Rational(modulus[k]);
    cur = std::move(next);
  }
  data_ = std::move(data);
}

FieldElement NumberField::zero() const { return element({}); }
FieldElement NumberField::one() const { return element({Rational(1)}); }
FieldElement NumberField::from_rational(const Rational& value) const { return element({value}); }

FieldElement NumberField::generator() const {
  if (degree() == 1) return from_rational(-Rational(modulus()[0]));
  return element({Rational(0), Rational(1)});
}

FieldElement NumberField::element(std::vector<Rational> coords) const {
  const auto n = static_cast<size_t>(degree());
  if (coords.size() <= n) {
    coords.resize(n, Rational(0));
    return FieldElement(*this, std::move(coords));
  }
  return reduce(RatPolynomial(std::move(coords)));
}

FieldElement NumberField::reduce(const RatPolynomial& p) const {
  const int n = degree();
  std::vector<Rational> out(static_cast<size_t>(n), Rational(0));
  const auto& c = p.coeffs();
  if (static_cast<int>(c.size()) <= 2 * n - 1) {
    for (int k = 0; k < static_cast<int>(c.size()); ++k) {
      if (k < n) {
        out[static_cast<size_t>(k)] += c[static_cast<size_t>(k)];
      } else if (c[static_cast<size_t>(k)] != 0) {
        const auto& hp = data_->high_powers[static_cast<size_t>(k - n)];
        for (int j = 0; j < n; ++j) out[static_cast<size_t>(j)] += c[static_cast<size_t>(k)] * hp[static_cast<size_t>(j)];
      }
    }
    return FieldElement(*this, std::move(out));
  }
  auto r = divmod(p, to_rational(modulus())).second;
  for (int k = 0; k <= r.degree(); ++k) out[static_cast<size_t>(k)] = r[k];
  return FieldElement(*this, std::move(out));
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldElement::is_integral() const {
  for (const auto& c : coords_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

namespace {

void check_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    fail(ErrorCode::IncompatibleField, "field elements have different moduli: " + to_string(a.field().modulus()) +
                                           " vs " + to_string(b.field().modulus()));
  }
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  std::vector<Rational> c(a.coords_);
  for (size_t k = 0; k < c.size(); ++k) c[k] += b.coords_[k];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a) {
  std::vector<Rational> c(a.coords_);
  for (auto& x : c) x = -x;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  std::vector<Rational> c(a.coords_);
  for (size_t k = 0; k < c.size(); ++k) c[k] -= b.coords_[k];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const Rational& a, const FieldElement& b) {
  std::vector<Rational> c(b.coords_);
  for (auto& x : c) x *= a;
  return FieldElement(b.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  const size_t n = a.coords_.size();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    if (a.coords_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (b.coords_[j] != 0) prod[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  return a.field_.reduce(RatPolynomial(std::move(prod)));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return a.coords_ == b.coords_;
}

FieldElement FieldElement::inverse() const {
  require(!is_zero(), ErrorCode::InvalidArgument, "inverse of zero field element");
  // Extended Euclid: s*a + t*P = g, g a nonzero constant since P is irreducible.
  RatPolynomial r0 = to_rational(field_.modulus());
  RatPolynomial r1 = as_polynomial();
  RatPolynomial s0;
  RatPolynomial s1{Rational(1)};
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return field_.reduce(Rational(1) / r1[0] * s1);
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

namespace {

void check_root(const FieldElement& a, const AlgebraicReal& root) {
  if (!(root.defining() == a.field().modulus())) {
    fail(ErrorCode::IncompatibleField, "root is not a root of the field modulus");
  }
}

// Double evaluation with a rigorous bound on the total error; 0 when undecided.
int filtered_sign(const std::vector<Rational>& coords, const AlgebraicReal& root) {
  constexpr double u = std::numeric_limits<double>::epsilon();
  const double x = root.midpoint().get_d();
  const double e = Rational(root.width() / 2).get_d() * (1 + 4 * u) + std::abs(x) * u;
  const double ax = std::abs(x);
  const double m = ax + e;
  double v = 0;
  double mag_m = 0;
  double mag_x = 0;
  for (auto it = coords.rbegin(); it != coords.rend(); ++it) {
    const double c = it->get_d();
    if (!std::isfinite(c)) return 0;
    v = v * x + c;
    mag_m = mag_m * m + std::abs(c);
    mag_x = mag_x * ax + std::abs(c);
  }
  const double n = static_cast<double>(coords.size());
  const double bound = (mag_m - mag_x) * (1 + 4 * n * u) + (4 * n + 4) * u * mag_m;
  if (!std::isfinite(v) || !std::isfinite(bound)) return 0;
  if (v > 2 * bound) return 1;
  if (v < -2 * bound) return -1;
  return 0;
}

}  // namespace

Interval field_interval(const FieldElement& a, const AlgebraicReal& root) {
  check_root(a, root);
  return evaluate(a.as_polynomial(), root.interval());
}

int field_sign(const FieldElement& a, const AlgebraicReal& root) {
  check_root(a, root);
  if (a.is_zero()) return 0;
  if (int s = filtered_sign(a.coords(), root)) return s;
  AlgebraicReal r = root;
  const RatPolynomial poly = a.as_polynomial();
  for (;;) {
    int s = evaluate(poly, r.interval()).certain_sign();
    if (s != 0) return s;
    r = r.refined(r.width() / (BigInt(1) << 32));
  }
}

std::string field_decimal(const FieldElement& a, const AlgebraicReal& root, int digits) {
  check_root(a, root);
  const RatPolynomial poly = a.as_polynomial();
  AlgebraicReal r = root;
  for (;;) {
    Interval iv = evaluate(poly, r.interval());
    if (iv.lo == iv.hi) return truncated_decimal(iv.lo, digits);
    if (auto s = truncated_decimal(iv.lo, iv.hi, digits)) return *s;
    r = r.refined(r.width() / (BigInt(1) << 16));
  }
}

double field_approx(const FieldElement& a, const AlgebraicReal& root) {
  check_root(a, root);
  const double x = root.midpoint().get_d();
  double v = 0;
  for (auto it = a.coords().rbegin(); it != a.coords().rend(); ++it) v = v * x + it->get_d();
  return v;
}

IntPolynomial minimal_polynomial(const FieldElement& a) {
  const int n = a.field().degree();
  // Incremental elimination on the coordinate vectors of a^0, a^1, ...
  std::vector<std::vector<Rational>> basis;  // reduced rows
  std::vector<int> pivots;
  std::vector<std::vector<Rational>> combos;  // row as combination of powers
  FieldElement power = a.field().one();
  for (int k = 0; k <= n; ++k) {
    std::vector<Rational> row = power.coords();
    std::vector<Rational> combo(static_cast<size_t>(n) + 1, Rational(0));
    combo[static_cast<size_t>(k)] = 1;
    for (size_t b = 0; b < basis.size(); ++b) {
      const Rational f = row[static_cast<size_t>(pivots[b])];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] -= f * basis[b][static_cast<size_t>(j)];
      for (int j = 0; j <= n; ++j) combo[static_cast<size_t>(j)] -= f * combos[b][static_cast<size_t>(j)];
    }
    int pivot = -1;
    for (int j = 0; j < n; ++j) {
      if (row[static_cast<size_t>(j)] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) return primitive_part(RatPolynomial(std::move(combo)));
    const Rational inv = Rational(1) / row[static_cast<size_t>(pivot)];
    for (auto& x : row) x *= inv;
    for (auto& x : combo) x *= inv;
    basis.push_back(std::move(row));
    combos.push_back(std::move(combo));
    pivots.push_back(pivot);
    power *= a;
  }
  fail(ErrorCode::InvalidArgument, "no linear dependence among powers");
}

IntPolynomial minimal_polynomial_of_power(const IntPolynomial& p, int d) {
  require(d >= 1, ErrorCode::InvalidArgument, "power must be >= 1");
  NumberField field(p);
  return minimal_polynomial(field.generator().pow(d));
}

std::vector<std::string> coord_strings(const FieldElement& a) {
  std::vector<std::string> out;
  for (const auto& c : a.coords()) out.push_back(to_fraction_string(c));
  return out;
}

}  // namespace silverline
