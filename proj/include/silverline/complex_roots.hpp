#pragma once

#include <vector>

#include "silverline/numeric.hpp"
#include "silverline/polynomial.hpp"

namespace silverline {

/// A disk known to contain exactly one complex root. Center and radius are
/// reported in double precision; modulus bounds are rigorous rationals.
struct ComplexRootEnclosure {
  double re = 0;
  double im = 0;
  double radius = 0;
  Rational modulus_lo;
  Rational modulus_hi;
};

/// Simultaneous (Aberth) iteration at 50 significant digits followed by
/// inclusion-disk certification. Throws CannotCertify when the disks overlap,
/// which happens for multiple roots.
std::vector<ComplexRootEnclosure> enclose_complex_roots(const IntPolynomial& p);

}  // namespace silverline
