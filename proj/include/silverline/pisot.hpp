#pragma once

#include <string>
#include <vector>

#include "silverline/algebraic_real.hpp"
#include "silverline/complex_roots.hpp"

namespace silverline {

enum class PisotStatus { Pisot, NotPisot, Indeterminate };

std::string_view to_string(PisotStatus status) noexcept;

struct PisotResult {
  PisotStatus status = PisotStatus::Indeterminate;
  /// All roots; the one matching the given real root is at `dominant`.
  std::vector<ComplexRootEnclosure> roots;
  int dominant = -1;
  /// Largest certified upper bound on the modulus of the other roots.
  Rational max_other_modulus;
  std::string reason;
};

inline const Rational& default_pisot_margin() {
  static const Rational margin(1, 1000000);
  return margin;
}

/// Certified Pisot test for an irreducible monic P and its real root > 1.
PisotResult is_pisot(const IntPolynomial& p, const AlgebraicReal& root,
                     const Rational& margin = default_pisot_margin());

}  // namespace silverline
