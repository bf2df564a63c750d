#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "silverline/polynomial.hpp"

namespace silverline {

inline constexpr int kDefaultFactorDegreeCap = 12;

/// A nontrivial monic integer factor of least degree, or nullopt when p is
/// irreducible over Q. Candidates are products of certified complex-root
/// subsets, rounded to integers and confirmed by exact division.
std::optional<IntPolynomial> find_factor(const IntPolynomial& p, int degree_cap = kDefaultFactorDegreeCap);

bool is_irreducible(const IntPolynomial& p, int degree_cap = kDefaultFactorDegreeCap);

/// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
std::vector<std::pair<IntPolynomial, int>> factor(const IntPolynomial& p, int degree_cap = kDefaultFactorDegreeCap);

}  // namespace silverline
