#pragma once

#include <optional>
#include <string>
#include <vector>

#include "silverline/nonneg.hpp"
#include "silverline/sigma_int.hpp"

namespace silverline {

/// Prototile indices 1..N; 0 stands for empty space E in completed sequences.
using Indicator = std::vector<int>;

/// Partition matrix U plus the ordered strings ins(R_i).
struct SubstitutionRule {
  NonNegIntMatrix u;
  std::vector<Indicator> strings;

  int size() const { return u.size(); }
};

struct RuleCheck {
  bool ok = true;
  /// 1-based row and column of the first mismatch, 0 when ok.
  int row = 0;
  int column = 0;
  BigInt expected;
  long actual = 0;
  std::string message;
};

RuleCheck validate_rule(const SubstitutionRule& rule);
/// Validating constructor; throws InvalidArgument with the mismatch.
SubstitutionRule make_rule(NonNegIntMatrix u, std::vector<Indicator> strings);
/// Strings listing each j u_ij times in ascending order of j.
SubstitutionRule canonical_rule(const NonNegIntMatrix& u);
/// Parses "13,1,2" into the strings (1,3), (1), (2).
std::vector<Indicator> parse_rule_strings(const std::string& text);

Indicator ins_apply(const SubstitutionRule& rule, const Indicator& s);

/// 2^-j for the first 1-based position j where the E-completed sequences differ.
Rational ultrametric_distance(const Indicator& x, const Indicator& y);

enum class ConvergenceMode { Direct, Subsequence, NoneWithinBudget };
std::string_view to_string(ConvergenceMode mode) noexcept;

struct ConvergenceReport {
  ConvergenceMode mode = ConvergenceMode::NoneWithinBudget;
  int k = 0;
  /// ins^k((start)), or the last iterate tried.
  Indicator prefix;
};

/// Smallest k <= k_budget with ins^k((start)) beginning with start.
/// k_budget <= 0 selects N^2 + 1.
ConvergenceReport detect_convergence(const SubstitutionRule& rule, int start, int k_budget = 0);

/// First tile_count entries of the limit of ins^{k l}((start)).
Indicator limit_prefix(const SubstitutionRule& rule, int start, int tile_count);

/// Partial sums 0 = y_0 < y_1 < ... of the tile lengths, checked increasing.
std::vector<FieldElement> endpoints(const Indicator& prefix, const std::vector<FieldElement>& lengths,
                                    const AlgebraicReal& root);

struct PeriodicityReport {
  int horizon = 0;
  int max_period = 0;
  /// Smallest m with s_i = s_{i+m} on the whole prefix.
  std::optional<int> period;
  /// Smallest m and offset j <= horizon / 2 with s_i = s_{i+m} for i >= j.
  std::optional<int> eventual_period;
  int eventual_offset = 0;
};

/// Requires prefix length >= 2 max_period.
PeriodicityReport check_periodicity(const Indicator& prefix, int max_period);

/// Prototile counts of ins^k((start)) for k = 0..iterations.
std::vector<std::vector<BigInt>> count_evolution(const SubstitutionRule& rule, int start, int iterations);

struct FrequencyDrift {
  std::vector<std::vector<Rational>> frequencies;
  /// Euclidean distance to the normalized Perron direction, in double precision.
  std::vector<double> distances;
  std::vector<double> perron_direction;
};

/// Requires a primitive partition matrix.
FrequencyDrift frequency_drift(const SubstitutionRule& rule, int start, int iterations);

/// Rule rho R_1 = R_1|...|R_N, rho R_j = R_{j-1} for the DW companion of a silver polynomial.
SubstitutionRule dw_rule(const SilverPolynomial& p);
/// Rule rho R^_j = R^_1|R^_{j+1}, rho R^_N = R^_1 for the distinguished tiling by rho-integers.
SubstitutionRule hat_rule(int n);
/// Lengths (rho^{N-1}, ..., rho, 1) scaled so that L(R_1) = 1.
std::vector<FieldElement> dw_lengths(const SilverBase& base);
/// Lengths 1, sum_{i=1}^{N-1} rho^-i, ..., 1/rho.
std::vector<FieldElement> hat_lengths(const SilverBase& base);

struct IntegerTilingReport {
  int n = 0;
  int tiles = 0;
  bool hat_matches = false;
  bool subordinate = false;
  /// The first tiles + 1 DW endpoints coincide with the rho-integers.
  bool dw_identical = false;
  /// Index of the first mismatching endpoint, -1 when none.
  int first_mismatch = -1;
  std::string detail;
};

/// Compares rho-integers with the endpoints of the hat tiling and the DW tiling.
IntegerTilingReport integer_vs_substitution(int n, int tile_count);

}  // namespace silverline
