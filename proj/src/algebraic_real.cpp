#include "silverline/algebraic_real.hpp"

#include <algorithm>

#include "silverline/error.hpp"

namespace silverline {

AlgebraicReal::AlgebraicReal(IntPolynomial defining, Rational lo, Rational hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
  require(defining_.degree() >= 1, ErrorCode::InvalidArgument, "defining polynomial must have degree >= 1");
  require(lo_ < hi_, ErrorCode::InvalidArgument, "isolating interval requires lo < hi");
  require(is_square_free(defining_), ErrorCode::InvalidArgument, "defining polynomial must be square-free");
  sign_lo_ = sign_at(defining_, lo_);
  const int sign_hi = sign_at(defining_, hi_);
  require(sign_lo_ * sign_hi < 0, ErrorCode::InvalidArgument, "no sign change on isolating interval");
  require(count_real_roots(defining_, lo_, hi_) == 1, ErrorCode::InvalidArgument,
          "isolating interval contains more than one root");
}

AlgebraicReal::AlgebraicReal(IntPolynomial defining, Rational lo, Rational hi, int sign_lo, Unchecked)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)), sign_lo_(sign_lo) {}

AlgebraicReal AlgebraicReal::bisected() const {
  const Rational mid = midpoint();
  const int s = sign_at(defining_, mid);
  if (s == 0) {
    // The root is rational and simple, so the sign changes across it.
    return AlgebraicReal(defining_, (lo_ + mid) / 2, (mid + hi_) / 2, sign_lo_, Unchecked{});
  }
  if (s == sign_lo_) return AlgebraicReal(defining_, mid, hi_, s, Unchecked{});
  return AlgebraicReal(defining_, lo_, mid, sign_lo_, Unchecked{});
}

AlgebraicReal AlgebraicReal::refined(const Rational& width) const {
  require(width > 0, ErrorCode::InvalidArgument, "refinement width must be positive");
  AlgebraicReal r = *this;
  while (r.width() > width) r = r.bisected();
  return r;
}

std::string AlgebraicReal::decimal(int digits) const {
  AlgebraicReal r = *this;
  for (;;) {
    if (auto s = truncated_decimal(r.lo_, r.hi_, digits)) return *s;
    r = r.bisected();
  }
}

namespace {

Rational cauchy_bound(const IntPolynomial& p) {
  Rational m = 0;
  const Rational lead = abs(Rational(p.leading()));
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(Rational(p[k])) / lead));
  return m + 1;
}

void isolate(const IntPolynomial& p, const std::vector<RatPolynomial>& sturm, const Rational& lo,
             const Rational& hi, std::vector<AlgebraicReal>& out) {
  const int n = count_real_roots(sturm, lo, hi);
  if (n == 0) return;
  if (n == 1 && sign_at(p, lo) * sign_at(p, hi) < 0) {
    out.emplace_back(p, lo, hi);
    return;
  }
  const Rational mid = (lo + hi) / 2;
  if (sign_at(p, mid) == 0) {
    // Shrink around the rational root until it is isolated.
    Rational eps = (hi - lo) / 4;
    while (count_real_roots(sturm, mid - eps, mid + eps) != 1 || sign_at(p, mid - eps) == 0 ||
           sign_at(p, mid + eps) == 0) {
      eps /= 2;
    }
    isolate(p, sturm, lo, mid - eps, out);
    out.emplace_back(p, mid - eps, mid + eps);
    isolate(p, sturm, mid + eps, hi, out);
    return;
  }
  isolate(p, sturm, lo, mid, out);
  isolate(p, sturm, mid, hi, out);
}

}  // namespace

std::vector<AlgebraicReal> real_roots(const IntPolynomial& p) {
  require(is_square_free(p), ErrorCode::InvalidArgument, "real_roots requires a square-free polynomial");
  std::vector<AlgebraicReal> out;
  if (p.degree() < 1) return out;
  const Rational b = cauchy_bound(p);
  isolate(p, sturm_sequence(p), -b, b, out);
  return out;
}

AlgebraicReal largest_real_root(const IntPolynomial& p) {
  auto roots = real_roots(p);
  if (roots.empty()) fail(ErrorCode::NotFound, "polynomial has no real root");
  return roots.back();
}

int compare_distinct(const AlgebraicReal& a, const AlgebraicReal& b) {
  AlgebraicReal x = a;
  AlgebraicReal y = b;
  for (;;) {
    if (x.hi() < y.lo()) return -1;
    if (y.hi() < x.lo()) return 1;
    if (x.width() >= y.width()) {
      x = x.bisected();
    } else {
      y = y.bisected();
    }
  }
}

}  // namespace silverline
