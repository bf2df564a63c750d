#include "silverline/complex_roots.hpp"

#include <boost/math/constants/constants.hpp>

#include <iomanip>
#include <sstream>

#include "detail/mp_roots.hpp"
#include "silverline/error.hpp"

namespace silverline {
namespace detail {

namespace {

const Real50& rounding_allowance() {
  static const Real50 eps("1e-40");
  return eps;
}

Rational to_rational(const Real50& x) {
  std::ostringstream out;
  out << std::setprecision(60) << std::scientific << x;
  return parse_rational(out.str());
}

Complex50 eval(const std::vector<Complex50>& c, const Complex50& z) {
  Complex50 acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

Rational lower_rational(const Real50& x) { return to_rational(x - rounding_allowance()); }
Rational upper_rational(const Real50& x) { return to_rational(x + rounding_allowance()); }

std::vector<RootDisk> isolate_root_disks(const IntPolynomial& p) {
  const int n = p.degree();
  require(n >= 1, ErrorCode::InvalidArgument, "root isolation needs degree >= 1");
  std::vector<Complex50> c;
  std::vector<Complex50> dc;
  for (const auto& a : p.coeffs()) c.emplace_back(Real50(a.get_str()));
  for (int k = 1; k <= n; ++k) dc.push_back(c[static_cast<size_t>(k)] * Real50(k));

  Real50 bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, Real50(abs(c[static_cast<size_t>(k)] / c.back())));
  bound += 1;

  std::vector<Complex50> z(static_cast<size_t>(n));
  const Real50 two_pi = 2 * boost::math::constants::pi<Real50>();
  for (int k = 0; k < n; ++k) {
    Real50 angle = two_pi * k / n + Real50("0.4");
    z[static_cast<size_t>(k)] = Complex50(bound * cos(angle), bound * sin(angle));
  }

  const Real50 tol("1e-45");
  for (int iter = 0; iter < 2000; ++iter) {
    Real50 largest_step = 0;
    for (int i = 0; i < n; ++i) {
      const auto& zi = z[static_cast<size_t>(i)];
      Complex50 pv = eval(c, zi);
      if (pv == Complex50(0)) continue;
      Complex50 ratio = pv / eval(dc, zi);
      Complex50 sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += Real50(1) / (zi - z[static_cast<size_t>(j)]);
      }
      Complex50 step = ratio / (Real50(1) - ratio * sum);
      z[static_cast<size_t>(i)] -= step;
      largest_step = std::max(largest_step, Real50(abs(step)));
    }
    if (largest_step < tol) break;
  }

  std::vector<RootDisk> disks;
  for (int i = 0; i < n; ++i) {
    const auto& zi = z[static_cast<size_t>(i)];
    Complex50 prod = c.back();
    for (int j = 0; j < n; ++j) {
      if (j != i) prod *= zi - z[static_cast<size_t>(j)];
    }
    if (prod == Complex50(0)) return {};
    Real50 r = Real50(n) * abs(eval(c, zi)) / abs(prod);
    r = r * Real50("1.000001") + rounding_allowance();
    disks.push_back({zi, r});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& a = disks[static_cast<size_t>(i)];
      const auto& b = disks[static_cast<size_t>(j)];
      if (abs(a.center - b.center) <= a.radius + b.radius) return {};
    }
  }
  return disks;
}

}  // namespace detail

std::vector<ComplexRootEnclosure> enclose_complex_roots(const IntPolynomial& p) {
  auto disks = detail::isolate_root_disks(p);
  if (disks.empty()) fail(ErrorCode::CannotCertify, "root disks overlap for " + to_string(p));
  std::vector<ComplexRootEnclosure> out;
  for (const auto& d : disks) {
    detail::Real50 m = abs(d.center);
    ComplexRootEnclosure e;
    e.re = static_cast<double>(d.center.real());
    e.im = static_cast<double>(d.center.imag());
    e.radius = static_cast<double>(d.radius);
    detail::Real50 lo = m - d.radius;
    e.modulus_lo = lo > 0 ? detail::lower_rational(lo) : Rational(0);
    if (e.modulus_lo < 0) e.modulus_lo = 0;
    e.modulus_hi = detail::upper_rational(m + d.radius);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace silverline
