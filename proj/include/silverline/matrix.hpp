#pragma once

#include <string>
#include <vector>

#include "silverline/error.hpp"
#include "silverline/numeric.hpp"
#include "silverline/polynomial.hpp"

namespace silverline {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}
  explicit Matrix(const std::vector<std::vector<T>>& rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (const auto& r : rows) {
      require(static_cast<int>(r.size()) == cols_, ErrorCode::InvalidArgument, "ragged matrix rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }

  std::vector<T> row(int i) const {
    return std::vector<T>(data_.begin() + static_cast<long>(index(i, 0)),
                          data_.begin() + static_cast<long>(index(i, 0)) + cols_);
  }
  std::vector<T> col(int j) const {
    std::vector<T> out;
    for (int i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    for (int i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorCode::InvalidArgument, "matrix shape mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    require(a.cols_ == static_cast<int>(v.size()), ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
    std::vector<T> out(static_cast<size_t>(a.rows_), T(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) out[static_cast<size_t>(i)] += a(i, j) * v[static_cast<size_t>(j)];
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::InvalidArgument, "matrix shape mismatch in sum");
    Matrix c = a;
    for (size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::InvalidArgument, "matrix shape mismatch in difference");
    Matrix c = a;
    for (size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix pow(unsigned long exponent) const {
    require(is_square(), ErrorCode::InvalidArgument, "power of a non-square matrix");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (exponent > 0) {
      if (exponent & 1UL) result = result * base;
      exponent >>= 1;
      if (exponent > 0) base = base * base;
    }
    return result;
  }

 private:
  size_t index(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

Rational determinant(const RatMatrix& m);
BigInt determinant(const IntMatrix& m);
/// Throws SingularTransform for singular input.
RatMatrix inverse(const RatMatrix& m);
int rank(const RatMatrix& m);

/// det(xI - M), monic, by the Faddeev-LeVerrier recursion.
IntPolynomial characteristic_polynomial(const IntMatrix& m);

/// Rows rendered as decimal strings.
std::vector<std::vector<std::string>> to_strings(const IntMatrix& m);
std::string to_string(const IntMatrix& m);

}  // namespace silverline
