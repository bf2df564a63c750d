#include "silverline/polynomial.hpp"

#include <sstream>

#include "silverline/error.hpp"

namespace silverline {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<BigInt> v;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    BigInt x = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    v.push_back(x);
  }
  if (p.leading() < 0) g = -g;
  for (auto& x : v) x /= g;
  return IntPolynomial(std::move(v));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  require(!b.is_zero(), ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
  const Rational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational q = rem[static_cast<size_t>(k)] / lead;
    if (q == 0) continue;
    quot[static_cast<size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k - db + j)] -= q * b[j];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial monic_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a;
  RatPolynomial y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return Rational(1) / x.leading() * x;
}

bool divides_exactly(const IntPolynomial& divisor, const IntPolynomial& dividend, IntPolynomial* quotient) {
  require(divisor.is_monic(), ErrorCode::InvalidArgument, "divisor must be monic");
  std::vector<BigInt> rem(dividend.coeffs());
  const int dd = divisor.degree();
  if (dividend.degree() < dd) {
    if (quotient) *quotient = {};
    return dividend.is_zero();
  }
  std::vector<BigInt> quot(static_cast<size_t>(dividend.degree() - dd) + 1, BigInt(0));
  for (int k = dividend.degree(); k >= dd; --k) {
    BigInt q = rem[static_cast<size_t>(k)];
    if (q == 0) continue;
    quot[static_cast<size_t>(k - dd)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k - dd + j)] -= q * divisor[j];
  }
  for (const auto& r : rem) {
    if (r != 0) return false;
  }
  if (quotient) *quotient = IntPolynomial(std::move(quot));
  return true;
}

bool is_square_free(const IntPolynomial& p) {
  if (p.degree() <= 1) return true;
  const auto rp = to_rational(p);
  return monic_gcd(rp, rp.derivative()).degree() == 0;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() <= 1) return p;
  const auto rp = to_rational(p);
  const auto g = monic_gcd(rp, rp.derivative());
  if (g.degree() == 0) return p;
  return primitive_part(divmod(rp, g).first);
}

int sign_at(const IntPolynomial& p, const Rational& x) { return sign(p.evaluate(x)); }

Interval evaluate(const RatPolynomial& p, const Interval& x) {
  Interval acc = Interval::point(Rational(0));
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Interval::point(*it);
  return acc;
}

std::vector<RatPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<RatPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(to_rational(p));
  seq.push_back(seq.back().derivative());
  while (!seq.back().is_zero()) {
    RatPolynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  return seq;
}

namespace {

int sign_variations(const std::vector<RatPolynomial>& seq, const Rational& x) {
  int count = 0;
  int prev = 0;
  for (const auto& q : seq) {
    int s = sign(q.evaluate(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

template <class C>
std::string render(const Polynomial<C>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    C c = p[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    C mag = negative ? C(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || k == 0) out << mag.get_str();
    if (k >= 1) {
      if (!unit) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace

int count_real_roots(const std::vector<RatPolynomial>& sturm, const Rational& lo, const Rational& hi) {
  return sign_variations(sturm, lo) - sign_variations(sturm, hi);
}

int count_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  return count_real_roots(sturm_sequence(p), lo, hi);
}

std::string to_string(const IntPolynomial& p, const std::string& var) { return render(p, var); }
std::string to_string(const RatPolynomial& p, const std::string& var) { return render(p, var); }

}  // namespace silverline
