#include "silverline/pisot.hpp"

#include <cmath>

#include "silverline/error.hpp"

namespace silverline {

std::string_view to_string(PisotStatus status) noexcept {
  switch (status) {
    case PisotStatus::Pisot: return "pisot";
    case PisotStatus::NotPisot: return "not-pisot";
    case PisotStatus::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

PisotResult is_pisot(const IntPolynomial& p, const AlgebraicReal& root, const Rational& margin) {
  require(p.is_monic(), ErrorCode::InvalidArgument, "Pisot test needs a monic polynomial");
  require(root.defining() == p, ErrorCode::InvalidArgument, "root does not belong to the polynomial");
  require(margin > 0, ErrorCode::InvalidArgument, "margin must be positive");
  PisotResult result;
  try {
    result.roots = enclose_complex_roots(p);
  } catch (const Error& e) {
    result.reason = e.what();
    return result;
  }
  const AlgebraicReal r = root.refined(Rational(1, 1000000000));
  require(r.lo() > 1, ErrorCode::Precondition, "Pisot test needs a real root > 1");
  // The real root is the unique disk whose real interval meets the isolating interval
  // and whose modulus range exceeds 1.
  for (size_t i = 0; i < result.roots.size(); ++i) {
    const auto& e = result.roots[i];
    const double lo = r.lo().get_d() - e.radius - 1e-12;
    const double hi = r.hi().get_d() + e.radius + 1e-12;
    if (std::abs(e.im) <= e.radius + 1e-12 && e.re >= lo && e.re <= hi) {
      if (result.dominant >= 0) {
        result.reason = "real root matches several disks";
        result.dominant = -1;
        return result;
      }
      result.dominant = static_cast<int>(i);
    }
  }
  if (result.dominant < 0) {
    result.reason = "real root not located among the disks";
    return result;
  }
  const Rational below = 1 - margin;
  const Rational above = 1 + margin;
  bool all_inside = true;
  bool some_outside = false;
  result.max_other_modulus = 0;
  for (size_t i = 0; i < result.roots.size(); ++i) {
    if (static_cast<int>(i) == result.dominant) continue;
    const auto& e = result.roots[i];
    if (e.modulus_hi > result.max_other_modulus) result.max_other_modulus = e.modulus_hi;
    if (e.modulus_hi < below) continue;
    all_inside = false;
    if (e.modulus_lo > above) {
      some_outside = true;
    } else {
      result.reason = "a conjugate has modulus within the margin of 1";
    }
  }
  if (all_inside) {
    result.status = PisotStatus::Pisot;
  } else if (some_outside && result.reason.empty()) {
    result.status = PisotStatus::NotPisot;
    result.reason = "a conjugate has modulus > 1";
  } else if (some_outside) {
    result.status = PisotStatus::NotPisot;
  }
  return result;
}

}  // namespace silverline
