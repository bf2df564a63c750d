#include "silverline/sigma_int.hpp"

#include <cmath>
#include <limits>

#include "silverline/error.hpp"

namespace silverline {

SigmaInt::SigmaInt(std::vector<std::uint8_t> bits) {
  size_t first = 0;
  while (first < bits.size() && bits[first] == 0) ++first;
  for (size_t k = first; k < bits.size(); ++k) {
    require(bits[k] <= 1, ErrorCode::InvalidArgument, "sigma-integer bits must be 0 or 1");
  }
  bits_.assign(bits.begin() + static_cast<long>(first), bits.end());
}

SigmaInt SigmaInt::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char ch : text) {
    if (ch != '0' && ch != '1') fail(ErrorCode::Parse, "bit string may contain only 0 and 1");
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return SigmaInt(std::move(bits));
}

int SigmaInt::coefficient(int k) const {
  const int idx = degree() - k;
  if (k < 0 || idx < 0) return 0;
  return bits_[static_cast<size_t>(idx)];
}

std::string SigmaInt::to_string() const {
  if (bits_.empty()) return "0";
  std::string s;
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

NormalForm::NormalForm(SigmaInt rep, int n) : rep_(std::move(rep)), n_(n) {
  require(n >= 2, ErrorCode::InvalidArgument, "window must be >= 2");
  if (!is_normal_form(rep_, n)) {
    fail(ErrorCode::Precondition, rep_.to_string() + " is not in normal form for N = " + std::to_string(n));
  }
}

SilverBase SilverBase::make(const SilverPolynomial& p) {
  NumberField field(p.polynomial());
  AlgebraicReal root = silver_number(p, dyadic(100));
  FieldElement rho = field.generator();
  FieldElement inv = rho.inverse();
  return SilverBase{p, field, root, rho, inv};
}

FieldElement value_of(const SigmaInt& x, const NumberField& field) {
  FieldElement acc = field.zero();
  const FieldElement one = field.one();
  const FieldElement g = field.generator();
  for (auto b : x.bits()) {
    acc *= g;
    if (b) acc += one;
  }
  return acc;
}

Interval value_interval(const SigmaInt& x, const AlgebraicReal& sigma) {
  Interval acc = Interval::point(Rational(0));
  const Interval s = sigma.interval();
  for (auto b : x.bits()) {
    acc = acc * s;
    if (b) acc = acc + Interval::point(Rational(1));
  }
  return acc;
}

SigmaInt inflate(const SigmaInt& x) {
  if (x.is_zero()) return x;
  auto bits = x.bits();
  bits.push_back(0);
  return SigmaInt(std::move(bits));
}

bool is_normal_form(const SigmaInt& x, int n) {
  require(n >= 2, ErrorCode::InvalidArgument, "window must be >= 2");
  int run = 0;
  for (auto b : x.bits()) {
    run = b ? run + 1 : 0;
    if (run >= n) return false;
  }
  return true;
}

NormalForm to_normal_form(const SigmaInt& x, int n) {
  require(n >= 2, ErrorCode::InvalidArgument, "window must be >= 2");
  // Index 0 is a spare leading slot for a carry out of the top coefficient.
  std::vector<std::uint8_t> b{0};
  b.insert(b.end(), x.bits().begin(), x.bits().end());
  for (;;) {
    int run = 0;
    int start = -1;
    for (size_t k = 1; k < b.size(); ++k) {
      run = b[k] ? run + 1 : 0;
      if (run == n) {
        start = static_cast<int>(k) - n + 1;
        break;
      }
    }
    if (start < 0) break;
    for (int k = start; k < start + n; ++k) b[static_cast<size_t>(k)] = 0;
    b[static_cast<size_t>(start - 1)] = 1;
    if (start - 1 == 0) {
      // A carry into the spare slot happens at most once.
      b.insert(b.begin(), 0);
    }
  }
  return NormalForm(SigmaInt(std::move(b)), n);
}

int compare(const NormalForm& a, const NormalForm& b) {
  require(a.window() == b.window(), ErrorCode::InvalidArgument, "normal forms use different windows");
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& x = a.rep().bits();
  const auto& y = b.rep().bits();
  for (size_t k = 0; k < x.size(); ++k) {
    if (x[k] != y[k]) return x[k] < y[k] ? -1 : 1;
  }
  return 0;
}

NormalForm largest_of_degree(int n, int window) {
  require(n >= 0, ErrorCode::InvalidArgument, "degree must be >= 0");
  require(window >= 2, ErrorCode::InvalidArgument, "window must be >= 2");
  std::vector<std::uint8_t> bits;
  const int blocks = (n + 1) / window;
  const int r = (n + 1) % window;
  for (int k = 0; k < blocks; ++k) {
    bits.insert(bits.end(), static_cast<size_t>(window - 1), 1);
    bits.push_back(0);
  }
  bits.insert(bits.end(), static_cast<size_t>(r), 1);
  return NormalForm(SigmaInt(std::move(bits)), window);
}

FieldElement prototile_gap(const SilverBase& base, int r) {
  const int n = base.degree();
  require(r >= 0 && r < n, ErrorCode::InvalidArgument, "gap index out of range");
  FieldElement sum = base.field.zero();
  FieldElement p = base.field.one();
  for (int i = 1; i <= n - r; ++i) {
    p *= base.rho_inverse;
    sum += p;
  }
  return sum;
}

Successor successor(const NormalForm& x, const SilverBase& base) {
  require(base.poly.is_distinguished(), ErrorCode::Precondition, "successor needs a distinguished base");
  const int n = x.window();
  require(n == base.degree(), ErrorCode::IncompatibleField, "window differs from the base degree");
  const auto& b = x.rep().bits();
  const int len = static_cast<int>(b.size());
  int p = -1;
  for (int k = len - 1; k >= 0; --k) {
    if (b[static_cast<size_t>(k)]) continue;
    int ones = 0;
    for (int j = k - 1; j >= 0 && b[static_cast<size_t>(j)]; --j) ++ones;
    if (ones < n - 1) {
      p = k;
      break;
    }
  }
  std::vector<std::uint8_t> next;
  if (p >= 0) next.assign(b.begin(), b.begin() + p);
  next.push_back(1);
  const int tail = len - 1 - p;
  next.insert(next.end(), static_cast<size_t>(tail), 0);
  FieldElement delta = tail == 0 ? base.field.one() : prototile_gap(base, tail % n);
  return {NormalForm(SigmaInt(std::move(next)), n), std::move(delta)};
}

std::vector<NormalForm> enumerate_integers(const SilverBase& base, int count) {
  require(count >= 1, ErrorCode::InvalidArgument, "count must be >= 1");
  std::vector<NormalForm> out{NormalForm(SigmaInt(), base.degree())};
  while (static_cast<int>(out.size()) < count) out.push_back(successor(out.back(), base).next);
  return out;
}

MinDifference min_difference_scan(const NumberField& field, const AlgebraicReal& root, int degree_bound,
                                  long long budget) {
  require(degree_bound >= 0, ErrorCode::InvalidArgument, "degree bound must be >= 0");
  require(degree_bound <= 30, ErrorCode::UnsupportedDegree, "degree bound too large for exhaustive scan");
  require(field.modulus().is_monic(), ErrorCode::InvalidArgument, "scan needs a monic modulus");
  const int n = field.degree();
  const int terms = degree_bound + 1;
  const AlgebraicReal fine = root.refined(dyadic(120));

  // Integer coordinates and double enclosures of rho^k.
  std::vector<std::vector<long long>> coords;
  std::vector<double> approx;
  double err = 0;
  double mag = 0;
  constexpr double u = std::numeric_limits<double>::epsilon();
  FieldElement power = field.one();
  for (int k = 0; k < terms; ++k) {
    std::vector<long long> c;
    for (const auto& x : power.coords()) {
      require(x.get_den() == 1 && abs(x) < Rational(BigInt(1) << 50), ErrorCode::UnsupportedDegree,
              "power coordinates out of range");
      c.push_back(x.get_num().get_si());
    }
    coords.push_back(std::move(c));
    const Interval iv = field_interval(power, fine);
    const Rational mid = (iv.lo + iv.hi) / 2;
    const double d = mid.get_d();
    approx.push_back(d);
    err += (Rational((iv.hi - iv.lo) / 2).get_d() + std::abs(d) * u) * (1 + 4 * u);
    mag += std::abs(d);
    power *= field.generator();
  }
  err += (terms + 2) * u * mag * (1 + 4 * u);

  MinDifference out;
  out.degree_bound = degree_bound;
  long long total = 1;
  for (int k = 0; k < terms; ++k) total *= 3;
  if (total > budget) {
    out.complete = false;
    total = budget;
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> q(static_cast<size_t>(terms), -1);
  std::vector<int> witness;
  std::vector<long long> acc(static_cast<size_t>(n));
  for (long long t = 0; t < total; ++t) {
    if (t > 0) {
      // Odometer increment with q_d least significant.
      int k = terms - 1;
      while (q[static_cast<size_t>(k)] == 1) q[static_cast<size_t>(k--)] = -1;
      ++q[static_cast<size_t>(k)];
    }
    ++out.scanned;
    std::fill(acc.begin(), acc.end(), 0);
    double v = 0;
    for (int k = 0; k < terms; ++k) {
      const int c = q[static_cast<size_t>(k)];
      if (c == 0) continue;
      const auto& pc = coords[static_cast<size_t>(k)];
      for (int j = 0; j < n; ++j) acc[static_cast<size_t>(j)] += c * pc[static_cast<size_t>(j)];
      v += c * approx[static_cast<size_t>(k)];
    }
    bool zero = true;
    for (long long a : acc) zero = zero && a == 0;
    if (zero) {
      ++out.zero_values;
      continue;
    }
    if (std::abs(v) < best) {
      best = std::abs(v);
      witness = q;
    }
  }
  require(!witness.empty(), ErrorCode::NotFound, "no nonzero value scanned");
  out.witness = witness;
  std::vector<Rational> wc;
  for (int k = 0; k < terms; ++k) wc.emplace_back(witness[static_cast<size_t>(k)]);
  const Interval wv = evaluate(RatPolynomial(wc), fine.interval());
  // Rounded up to a 2^-80 grid.
  const Rational exact_hi = std::max(abs(wv.lo), abs(wv.hi));
  BigInt grid;
  const Rational scaled = exact_hi * Rational(BigInt(1) << 80);
  mpz_cdiv_q(grid.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational whi(grid, BigInt(1) << 80);
  whi.canonicalize();
  Rational lo = Rational(best) - Rational(err);
  if (lo < 0) lo = 0;
  out.min_abs = {lo, whi};
  return out;
}

}  // namespace silverline
