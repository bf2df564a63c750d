#include "silverline/nonneg.hpp"

#include <algorithm>
#include <numeric>

#include "silverline/factorization.hpp"

namespace silverline {

NonNegIntMatrix::NonNegIntMatrix(IntMatrix m) : m_(std::move(m)) {
  require(m_.is_square() && m_.rows() >= 1, ErrorCode::InvalidArgument, "matrix must be square and nonempty");
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j)
      require(m_(i, j) >= 0, ErrorCode::InvalidArgument, "matrix has a negative entry");
}

NonNegIntMatrix NonNegIntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  return NonNegIntMatrix(silverline::from_rows(rows));
}

std::string_view to_string(CompanionForm form) noexcept {
  switch (form) {
    case CompanionForm::DW: return "dw";
    case CompanionForm::DWTranspose: return "dwt";
    case CompanionForm::P: return "p";
    case CompanionForm::PTranspose: return "pt";
  }
  return "dw";
}

CompanionForm parse_companion_form(std::string_view text) {
  if (text == "dw") return CompanionForm::DW;
  if (text == "dwt") return CompanionForm::DWTranspose;
  if (text == "p") return CompanionForm::P;
  if (text == "pt") return CompanionForm::PTranspose;
  fail(ErrorCode::Parse, "unknown companion form '" + std::string(text) + "'");
}

namespace {

// c_j = -(coefficient of X^{N-j}), j = 1..N.
std::vector<BigInt> c_coefficients(const IntPolynomial& p) {
  require(p.is_monic() && p.degree() >= 1, ErrorCode::InvalidArgument, "companion needs a monic polynomial");
  std::vector<BigInt> c(static_cast<size_t>(p.degree()) + 1);
  for (int j = 1; j <= p.degree(); ++j) c[static_cast<size_t>(j)] = -p[p.degree() - j];
  return c;
}

using Pattern = std::vector<std::vector<char>>;

Pattern pattern_of(const NonNegIntMatrix& m) {
  const int n = m.size();
  Pattern p(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j) > 0;
  return p;
}

Pattern pattern_product(const Pattern& a, const Pattern& b) {
  const size_t n = a.size();
  Pattern c(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (!a[i][k]) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] |= b[k][j];
    }
  return c;
}

bool all_positive(const Pattern& p) {
  for (const auto& r : p)
    for (char x : r)
      if (!x) return false;
  return true;
}

unsigned long wielandt_exponent(int n) { return static_cast<unsigned long>(n * n - 2 * n + 2); }

}  // namespace

IntMatrix companion(const IntPolynomial& p, CompanionForm form) {
  const auto c = c_coefficients(p);
  const int n = p.degree();
  IntMatrix m(n, n);
  switch (form) {
    case CompanionForm::DW:
    case CompanionForm::DWTranspose:
      for (int j = 0; j < n; ++j) m(0, j) = c[static_cast<size_t>(j + 1)];
      for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
      break;
    case CompanionForm::P:
    case CompanionForm::PTranspose:
      for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
      for (int j = 0; j < n; ++j) m(n - 1, j) = c[static_cast<size_t>(n - j)];
      break;
  }
  if (form == CompanionForm::DWTranspose || form == CompanionForm::PTranspose) return m.transpose();
  return m;
}

NonNegIntMatrix companion(const SilverPolynomial& p, CompanionForm form) {
  return NonNegIntMatrix(companion(p.polynomial(), form));
}

bool is_irreducible_matrix(const NonNegIntMatrix& m) {
  const int n = m.size();
  auto reach_all = [&](bool transpose) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        const bool edge = transpose ? m(j, i) > 0 : m(i, j) > 0;
        if (edge && !seen[static_cast<size_t>(j)]) {
          seen[static_cast<size_t>(j)] = 1;
          stack.push_back(j);
        }
      }
    }
    for (char s : seen)
      if (!s) return false;
    return true;
  };
  return reach_all(false) && reach_all(true);
}

bool is_primitive(const NonNegIntMatrix& m) {
  Pattern result;
  Pattern base = pattern_of(m);
  unsigned long e = wielandt_exponent(m.size());
  bool have = false;
  while (e > 0) {
    if (e & 1UL) {
      result = have ? pattern_product(result, base) : base;
      have = true;
    }
    e >>= 1;
    if (e > 0) base = pattern_product(base, base);
  }
  return all_positive(result);
}

std::optional<int> primitivity_exponent(const NonNegIntMatrix& m) {
  const Pattern base = pattern_of(m);
  Pattern cur = base;
  const int limit = static_cast<int>(wielandt_exponent(m.size()));
  for (int k = 1; k <= limit; ++k) {
    if (all_positive(cur)) return k;
    cur = pattern_product(cur, base);
  }
  return std::nullopt;
}

GcdCriterion silver_primitivity_by_gcd(const SilverPolynomial& p) {
  int g = 0;
  for (int j : p.support()) g = std::gcd(g, j);
  return {g, g == 1};
}

Decomposition decompose_nonprimitive(const SilverPolynomial& p) {
  const int d = silver_primitivity_by_gcd(p).gcd;
  if (d == 1) fail(ErrorCode::NoDecomposition, p.bit_string() + " already has a primitive companion matrix");
  std::vector<int> bits;
  for (int j = d; j <= p.degree(); j += d) bits.push_back(p.bit(j));
  return {SilverPolynomial(std::move(bits)), d};
}

std::vector<FieldElement> null_vector(const IntMatrix& m, const FieldElement& rho) {
  const NumberField& f = rho.field();
  const int n = m.rows();
  std::vector<std::vector<FieldElement>> a;
  for (int i = 0; i < n; ++i) {
    std::vector<FieldElement> row;
    for (int j = 0; j < n; ++j) {
      FieldElement x = f.from_rational(Rational(m(i, j)));
      if (i == j) x -= rho;
      row.push_back(std::move(x));
    }
    a.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int p = r;
    while (p < n && a[static_cast<size_t>(p)][static_cast<size_t>(c)].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[static_cast<size_t>(p)], a[static_cast<size_t>(r)]);
    const FieldElement inv = a[static_cast<size_t>(r)][static_cast<size_t>(c)].inverse();
    for (auto& x : a[static_cast<size_t>(r)]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || a[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) continue;
      const FieldElement factor = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
      for (int j = 0; j < n; ++j) {
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -= factor * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  require(r < n, ErrorCode::Precondition, "rho is not an eigenvalue");
  int free_col = -1;
  for (int c = n - 1; c >= 0; --c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
      free_col = c;
      break;
    }
  }
  std::vector<FieldElement> x(static_cast<size_t>(n), f.zero());
  x[static_cast<size_t>(free_col)] = f.one();
  for (int i = 0; i < r; ++i) {
    x[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = -a[static_cast<size_t>(i)][static_cast<size_t>(free_col)];
  }
  for (int i = n - 1; i >= 0; --i) {
    if (!x[static_cast<size_t>(i)].is_zero()) {
      const FieldElement inv = x[static_cast<size_t>(i)].inverse();
      for (auto& e : x) e *= inv;
      break;
    }
  }
  return x;
}

namespace {

struct CollatzWielandt {
  Rational lower;
  Rational upper;
  int iterations;
};

CollatzWielandt collatz_wielandt(const NonNegIntMatrix& m, const Rational& width, int max_iterations) {
  const int n = m.size();
  IntMatrix step = m.matrix();
  if (!is_primitive(m)) step = step + IntMatrix::identity(n);
  std::vector<BigInt> x(static_cast<size_t>(n), BigInt(1));
  Rational lo = 0;
  Rational hi = -1;
  int it = 0;
  for (; it < max_iterations; ++it) {
    const auto mx = m.matrix() * x;
    Rational cur_lo = Rational(mx[0], x[0]);
    Rational cur_hi = cur_lo;
    for (int i = 1; i < n; ++i) {
      Rational q(mx[static_cast<size_t>(i)], x[static_cast<size_t>(i)]);
      q.canonicalize();
      if (q < cur_lo) cur_lo = q;
      if (q > cur_hi) cur_hi = q;
    }
    cur_lo.canonicalize();
    cur_hi.canonicalize();
    if (cur_lo > lo) lo = cur_lo;
    if (hi < 0 || cur_hi < hi) hi = cur_hi;
    if (hi - lo <= width) break;
    x = step * x;
    size_t bits = 0;
    for (const auto& v : x) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
    if (bits > 512) {
      const auto shift = static_cast<mp_bitcnt_t>(bits - 384);
      for (auto& v : x) {
        mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), shift);
        if (v == 0) v = 1;
      }
    }
  }
  return {lo, hi, it};
}

}  // namespace

PerronData perron(const NonNegIntMatrix& m, const Rational& width) {
  require(width > 0, ErrorCode::InvalidArgument, "width must be positive");
  require(is_irreducible_matrix(m), ErrorCode::Precondition, "Perron data needs an irreducible matrix");
  const auto cw = collatz_wielandt(m, width, 400);
  const IntPolynomial chi = characteristic_polynomial(m.matrix());
  std::optional<AlgebraicReal> best;
  IntPolynomial best_factor;
  for (const auto& [f, mult] : factor(chi)) {
    auto roots = real_roots(f);
    if (roots.empty()) continue;
    if (!best || compare_distinct(roots.back(), *best) > 0) {
      best = roots.back();
      best_factor = f;
    }
  }
  require(best.has_value(), ErrorCode::Precondition, "characteristic polynomial has no real root");
  AlgebraicReal root = best->refined(width);
  if (root.hi() < cw.lower || root.lo() > cw.upper) {
    fail(ErrorCode::Precondition, "Perron root disagrees with Collatz-Wielandt bounds");
  }
  Interval rho{std::max(root.lo(), cw.lower), std::min(root.hi(), cw.upper)};
  NumberField field(best_factor);
  const FieldElement r = field.generator();
  auto right = null_vector(m.matrix(), r);
  auto left = null_vector(m.matrix().transpose(), r);
  for (const auto& v : {right, left}) {
    for (const auto& e : v) require(field_sign(e, root) > 0, ErrorCode::Precondition, "Perron vector not positive");
  }
  return PerronData{rho,   cw.lower,    cw.upper, cw.iterations, best_factor, root, field,
                    std::move(right), std::move(left)};
}

IntMatrix conjugation_T(const IntPolynomial& p) {
  const auto c = c_coefficients(p);
  const int n = p.degree();
  if (c[static_cast<size_t>(n)] == 0) fail(ErrorCode::SingularTransform, "constant coefficient is zero");
  IntMatrix t(n, n);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (i + j >= n) t(i - 1, j - 1) = c[static_cast<size_t>(2 * n - i - j)];
  t(n - 1, n - 1) = 1;
  const IntMatrix cp = companion(p, CompanionForm::P);
  require(t * cp == cp.transpose() * t, ErrorCode::SingularTransform, "T C_P != C_P^tr T");
  return t;
}

namespace {

std::vector<std::vector<BigInt>> krylov_candidates(int n, int budget) {
  std::vector<std::vector<BigInt>> out;
  auto push = [&](std::vector<BigInt> v) {
    if (static_cast<int>(out.size()) >= budget) return;
    for (const auto& w : out)
      if (w == v) return;
    out.push_back(std::move(v));
  };
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> v(static_cast<size_t>(n), BigInt(0));
    v[static_cast<size_t>(i)] = 1;
    push(std::move(v));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<BigInt> v(static_cast<size_t>(n), BigInt(0));
      v[static_cast<size_t>(i)] = 1;
      v[static_cast<size_t>(j)] = 1;
      push(std::move(v));
    }
  std::vector<int> digits(static_cast<size_t>(n), 0);
  while (static_cast<int>(out.size()) < budget) {
    int k = n - 1;
    while (k >= 0 && digits[static_cast<size_t>(k)] == 2) digits[static_cast<size_t>(k--)] = 0;
    if (k < 0) break;
    ++digits[static_cast<size_t>(k)];
    push(std::vector<BigInt>(digits.begin(), digits.end()));
  }
  return out;
}

}  // namespace

KrylovResult krylov_W(const NonNegIntMatrix& a, KrylovDirection direction) {
  const int n = a.size();
  const IntMatrix& am = a.matrix();
  const IntMatrix step = direction == KrylovDirection::Row ? am.transpose() : am;
  const int budget = 2 * n * n;
  const auto candidates = krylov_candidates(n, budget);
  int tried = 0;
  for (const auto& u : candidates) {
    ++tried;
    IntMatrix w(n, n);
    std::vector<BigInt> v = u;
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        if (direction == KrylovDirection::Row) {
          w(k, i) = v[static_cast<size_t>(i)];
        } else {
          w(i, k) = v[static_cast<size_t>(i)];
        }
      }
      v = step * v;
    }
    if (determinant(w) != 0) {
      return {w, u, tried, characteristic_polynomial(am)};
    }
  }
  fail(ErrorCode::NotFound, "no Krylov vector found within budget " + std::to_string(budget));
}

IntMatrix intertwiner(const NonNegIntMatrix& a, const NonNegIntMatrix& b) {
  require(a.size() == b.size(), ErrorCode::Incompatible, "matrices differ in size");
  const IntPolynomial chi = characteristic_polynomial(a.matrix());
  if (!(chi == characteristic_polynomial(b.matrix()))) {
    fail(ErrorCode::Incompatible, "characteristic polynomials differ");
  }
  const int n = a.size();
  for (int j = 1; j <= n; ++j) {
    require(-chi[n - j] >= 0, ErrorCode::Precondition, "characteristic polynomial has a negative b_j");
  }
  require(chi[0] != 0, ErrorCode::Precondition, "b_N must be nonzero");
  require(is_irreducible_matrix(a) && is_irreducible_matrix(b), ErrorCode::Precondition,
          "intertwiner needs irreducible matrices");
  const auto wa = krylov_W(a, KrylovDirection::Row);
  const auto wb = krylov_W(b, KrylovDirection::Column);
  const IntMatrix m = wb.w * conjugation_T(chi) * wa.w;
  require(b.matrix() * m == m * a.matrix(), ErrorCode::Precondition, "B M != M A");
  require(determinant(m) != 0, ErrorCode::SingularTransform, "intertwiner is singular");
  return m;
}

}  // namespace silverline
