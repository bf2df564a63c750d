#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "silverline/algebraic_real.hpp"
#include "silverline/matrix.hpp"
#include "silverline/number_field.hpp"
#include "silverline/silver.hpp"

namespace silverline {

/// Square integer matrix with all entries >= 0.
class NonNegIntMatrix {
 public:
  /// Throws InvalidArgument for non-square input or negative entries.
  explicit NonNegIntMatrix(IntMatrix m);
  static NonNegIntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  const IntMatrix& matrix() const { return m_; }
  int size() const { return m_.rows(); }
  const BigInt& operator()(int i, int j) const { return m_(i, j); }
  NonNegIntMatrix transpose() const { return NonNegIntMatrix(m_.transpose()); }

  friend bool operator==(const NonNegIntMatrix& a, const NonNegIntMatrix& b) { return a.m_ == b.m_; }

 private:
  IntMatrix m_;
};

/// Companion layouts for P = X^N - c_1 X^{N-1} - ... - c_N.
///  DW: first row (c_1 .. c_N), ones on the subdiagonal.
///  P: ones on the superdiagonal, last row (c_N .. c_1).
enum class CompanionForm { DW, DWTranspose, P, PTranspose };

std::string_view to_string(CompanionForm form) noexcept;
/// Accepts "dw", "dwt", "p", "pt".
CompanionForm parse_companion_form(std::string_view text);

/// Companion matrix of a monic polynomial; entries may be negative.
IntMatrix companion(const IntPolynomial& p, CompanionForm form);
NonNegIntMatrix companion(const SilverPolynomial& p, CompanionForm form);

/// Strong connectivity of the graph with an edge i -> j when m_ij > 0.
bool is_irreducible_matrix(const NonNegIntMatrix& m);
/// Positivity of the pattern of M^(N^2 - 2N + 2), by repeated squaring.
bool is_primitive(const NonNegIntMatrix& m);
/// Smallest k <= N^2 - 2N + 2 with M^k entrywise positive.
std::optional<int> primitivity_exponent(const NonNegIntMatrix& m);

struct GcdCriterion {
  int gcd = 0;
  bool primitive = false;
};
/// gcd of the indices j with b_j = 1.
GcdCriterion silver_primitivity_by_gcd(const SilverPolynomial& p);

struct Decomposition {
  SilverPolynomial q;
  int d;
};
/// P(X) = Q(X^d) with d the index gcd; throws NoDecomposition when d = 1.
Decomposition decompose_nonprimitive(const SilverPolynomial& p);

/// Perron root and exact eigenvectors over Q(rho).
struct PerronData {
  /// Certified enclosure of rho with width at most the requested width.
  Interval rho;
  /// Collatz-Wielandt bounds reached by exact power iteration.
  Rational cw_lower;
  Rational cw_upper;
  int cw_iterations = 0;
  /// Irreducible factor of the characteristic polynomial having rho as a root.
  IntPolynomial minimal_polynomial;
  AlgebraicReal root;
  NumberField field;
  /// M w = rho w and v^T M = rho v^T, scaled so the last entry is 1.
  std::vector<FieldElement> right;
  std::vector<FieldElement> left;
};

/// Throws Precondition for a reducible matrix.
PerronData perron(const NonNegIntMatrix& m, const Rational& width);

/// Solves (M - rho I) x = 0 over Q(rho); x is scaled so its last nonzero entry is 1.
std::vector<FieldElement> null_vector(const IntMatrix& m, const FieldElement& rho);

/// Matrix T with T C_P = C_P^tr T; throws SingularTransform when c_N = 0.
IntMatrix conjugation_T(const IntPolynomial& p);

enum class KrylovDirection { Row, Column };

struct KrylovResult {
  /// Row: rows u^T A^k, W A = C_P W. Column: columns A^k u, A W = W C_P^tr.
  IntMatrix w;
  std::vector<BigInt> u;
  int candidates_tried = 0;
  IntPolynomial characteristic;
};

/// Deterministic search: basis vectors, sums of two basis vectors, then
/// {0,1,2}-vectors in lexicographic order; budget 2N^2 candidates.
KrylovResult krylov_W(const NonNegIntMatrix& a, KrylovDirection direction);

/// M = W_B^col T W_A^row with B M = M A, checked exactly.
IntMatrix intertwiner(const NonNegIntMatrix& a, const NonNegIntMatrix& b);

}  // namespace silverline
