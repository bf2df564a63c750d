#include "silverline/matrix.hpp"

#include <sstream>

namespace silverline {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<BigInt>> v;
  for (const auto& r : rows) {
    std::vector<BigInt> row;
    for (long x : r) row.emplace_back(x);
    v.push_back(std::move(row));
  }
  return IntMatrix(v);
}

namespace {

// Row echelon form in place; returns the rank and the determinant sign/scale.
int eliminate(RatMatrix& a, Rational* det) {
  const int n = a.rows();
  const int m = a.cols();
  Rational d = 1;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int p = r;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) {
      d = 0;
      continue;
    }
    if (p != r) {
      for (int j = 0; j < m; ++j) std::swap(a(p, j), a(r, j));
      d = -d;
    }
    d *= a(r, c);
    for (int i = r + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (int j = c; j < m; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  if (det) *det = r == n ? d : Rational(0);
  return r;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  require(m.is_square(), ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  RatMatrix a = m;
  Rational d;
  eliminate(a, &d);
  return d;
}

BigInt determinant(const IntMatrix& m) {
  require(m.is_square(), ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  const int n = a.rows();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sgn = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sgn = -sgn;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sgn * a(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& m) {
  require(m.is_square(), ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const int n = m.rows();
  RatMatrix a(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) fail(ErrorCode::SingularTransform, "matrix is singular");
    if (p != c)
      for (int j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(c, j));
    const Rational inv = 1 / a(c, c);
    for (int j = 0; j < 2 * n; ++j) a(c, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (int j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  RatMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = a(i, n + j);
  return out;
}

int rank(const RatMatrix& m) {
  RatMatrix a = m;
  return eliminate(a, nullptr);
}

IntPolynomial characteristic_polynomial(const IntMatrix& m) {
  require(m.is_square(), ErrorCode::InvalidArgument, "characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  const RatMatrix a = to_rational(m);
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
  c[static_cast<size_t>(n)] = 1;
  RatMatrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = a * mk;
    for (int i = 0; i < n; ++i) mk(i, i) += c[static_cast<size_t>(n - k + 1)];
    RatMatrix am = a * mk;
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[static_cast<size_t>(n - k)] = -tr / k;
  }
  std::vector<BigInt> out;
  for (const auto& x : c) out.push_back(x.get_num());
  return IntPolynomial(std::move(out));
}

std::vector<std::vector<std::string>> to_strings(const IntMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(std::move(row));
  }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (int j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace silverline
