#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <vector>

#include "silverline/numeric.hpp"
#include "silverline/polynomial.hpp"

namespace silverline::detail {

using Real50 = boost::multiprecision::cpp_bin_float_50;
using Complex50 = boost::multiprecision::cpp_complex_50;

struct RootDisk {
  Complex50 center;
  Real50 radius;
};

/// Aberth iteration plus inclusion radii. Returns an empty vector when the
/// disks cannot be separated.
std::vector<RootDisk> isolate_root_disks(const IntPolynomial& p);

/// Exact rational no smaller than x minus a rounding allowance.
Rational lower_rational(const Real50& x);
/// Exact rational no larger than x plus a rounding allowance.
Rational upper_rational(const Real50& x);

}  // namespace silverline::detail
