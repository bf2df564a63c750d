#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "silverline/algebraic_real.hpp"
#include "silverline/number_field.hpp"
#include "silverline/pisot.hpp"
#include "silverline/sigma_int.hpp"

namespace silverline {

/// Minimum of |q(rho)| over q with coefficients in {-1, 0, 1} and degree <= bound.
/// The infimum over all degrees can be smaller, so the value is only evidence
/// for the scanned range.
struct MuEstimate {
  MinDifference scan;
  /// Dyadic rational not above scan.min_abs.lo.
  Rational lower;
  bool range_limited = true;
};

MuEstimate estimate_mu(const IntPolynomial& p, const AlgebraicReal& root, int degree_bound);

/// Bounds for A = U^tr restricted to the invariant complement Z = {x : r.x = 0},
/// r the left Perron vector. For z in Z: |A^k z| <= kappa delta^k |z|.
struct ContractionBound {
  /// Upper bound on the moduli of the non-Perron eigenvalues.
  Rational delta;
  /// Upper bound on |V_Z|_F |V^{-1}_Z|_F for the eigenvector basis.
  Rational kappa;
  /// kappa / (1 - delta), bounding |q(A) z| / |z| for every q in J.
  Rational gamma;
};

/// Throws CannotCertify unless the root is certified Pisot.
ContractionBound contraction_bound(const IntPolynomial& p, const AlgebraicReal& root);

struct DichotomyCertificate {
  IntPolynomial poly;
  AlgebraicReal root;
  /// Non-negative integers a_{j,0}; the rational point is v0 / scale.
  std::vector<BigInt> v0;
  BigInt scale;
  /// 1 = L * sum_j v0_j rho^{-j}.
  FieldElement L;
  Rational delta;
  Rational kappa;
  Rational gamma;
  /// Lower bound on the smallest entry of the unit Perron vector w of A.
  Rational omega;
  Rational mu_lower;
  /// Grid multiplier that produced v0 and a lower bound on the recovered alpha.
  Rational alpha_grid;
  Rational alpha_lower;
  int grid_exponent = 0;
  /// Largest degree verified by verify_certificate; -1 before verification.
  int verified_degree = -1;
};

/// Searches alpha in {3/4, 1, 3/2} and denominators 2^s, s <= 12.
/// Throws CannotCertify for non-Pisot input and NotFound when the grid is exhausted.
DichotomyCertificate build_certificate(const IntPolynomial& p, const AlgebraicReal& root, const Rational& mu_lower);

struct VerificationResult {
  bool ok = false;
  int degree_bound = 0;
  long long checked = 0;
  long long zeros = 0;
  long long sampled = 0;
  /// First failing q in lexicographic order, lowest degree first.
  std::optional<std::vector<int>> witness;
  std::string reason;
};

using ProgressCallback = std::function<void(long long done, long long total)>;

/// For all q with q(rho) != 0, checks that every entry of q(A) v0 is nonzero
/// with the sign of q(rho); re-derives q(rho) = L (1, 1/rho, ...) q(A) v0
/// exactly for a deterministic sample. Uses thread_count() workers.
VerificationResult verify_certificate(const DichotomyCertificate& cert, int degree_bound,
                                      const ProgressCallback& progress = {});

/// v_k = A^k v0 for k = 0..count-1.
std::vector<std::vector<BigInt>> certificate_orbit(const DichotomyCertificate& cert, int count);

enum class ImpossibilityCase { Supergolden, Plastic, Golden };

std::string_view to_string(ImpossibilityCase which) noexcept;
ImpossibilityCase parse_impossibility_case(std::string_view text);

struct IdentityCheck {
  std::string text;
  bool holds = false;
};

/// Assumes the difference D of two rho-integers equals L(a + b/rho + c/rho^2)
/// with rational L > 0 and integers a, b, c >= 0, multiplies by rho^2 and
/// collects powers of rho.
struct ImpossibilityReport {
  ImpossibilityCase which;
  IntPolynomial poly;
  std::string difference;
  /// Relation coefficients, highest power first, as L*t + offset with t the
  /// matching unknown among a, b, c.
  std::vector<Rational> offsets;
  std::vector<std::string> relation;
  std::vector<IdentityCheck> identities;
  int minimal_degree = 0;
  int relation_degree = 2;
  bool contradiction = false;
  std::string reason;
  /// For a consistent case: (L, a, b, c) satisfying the assumption exactly.
  std::optional<std::vector<Rational>> solution;
};

ImpossibilityReport rational_L_impossibility(ImpossibilityCase which);

enum class DichotomyVerdict { CertifiedTiling, EvidenceOfClustering, Inconclusive };

std::string_view to_string(DichotomyVerdict verdict) noexcept;

struct DichotomyReport {
  IntPolynomial poly;
  std::vector<MuEstimate> trend;
  PisotStatus pisot = PisotStatus::Indeterminate;
  bool distinguished = false;
  std::optional<DichotomyCertificate> certificate;
  std::optional<VerificationResult> verification;
  DichotomyVerdict verdict = DichotomyVerdict::Inconclusive;
  std::string reason;
  std::vector<std::string> notes;
};

/// Scans each bound, then builds and verifies a certificate at the largest bound.
DichotomyReport dichotomy_report(const IntPolynomial& p, const AlgebraicReal& root, const std::vector<int>& bounds,
                                 const ProgressCallback& progress = {});

}  // namespace silverline
