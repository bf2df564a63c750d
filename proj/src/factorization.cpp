#include "silverline/factorization.hpp"

#include <algorithm>

#include "detail/mp_roots.hpp"
#include "silverline/error.hpp"

namespace silverline {

namespace {

using detail::Complex50;
using detail::Real50;

struct Disk {
  Complex50 c;
  Real50 r;
};

Disk mul(const Disk& a, const Disk& b) {
  return {a.c * b.c, Real50(abs(a.c)) * b.r + Real50(abs(b.c)) * a.r + a.r * b.r};
}

// Expands prod (x - z_i) over the chosen disks and rounds to an integer
// polynomial when every coefficient disk contains exactly one integer.
std::optional<IntPolynomial> round_product(const std::vector<detail::RootDisk>& disks,
                                           const std::vector<int>& subset) {
  std::vector<Disk> coeffs{{Complex50(1), Real50(0)}};
  for (int idx : subset) {
    const Disk root{disks[static_cast<size_t>(idx)].center, disks[static_cast<size_t>(idx)].radius};
    std::vector<Disk> next(coeffs.size() + 1, Disk{Complex50(0), Real50(0)});
    for (size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1].c += coeffs[k].c;
      next[k + 1].r += coeffs[k].r;
      Disk t = mul(coeffs[k], root);
      next[k].c -= t.c;
      next[k].r += t.r;
    }
    coeffs = std::move(next);
  }
  std::vector<BigInt> out;
  const Real50 half("0.5");
  for (const auto& d : coeffs) {
    require(d.r < half, ErrorCode::CannotCertify, "root disks too wide to round factor coefficients");
    if (abs(d.c.imag()) > d.r) return std::nullopt;
    Real50 nearest = round(d.c.real());
    if (abs(d.c.real() - nearest) > d.r) return std::nullopt;
    require(abs(nearest) < Real50("1e17"), ErrorCode::UnsupportedDegree, "factor coefficient out of range");
    out.emplace_back(static_cast<long>(nearest.convert_to<long long>()));
  }
  return IntPolynomial(std::move(out));
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<size_t>(i)];
  for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  return true;
}

void check_input(const IntPolynomial& p, int degree_cap) {
  require(p.degree() >= 1, ErrorCode::InvalidArgument, "factorization needs degree >= 1");
  require(p.is_monic(), ErrorCode::InvalidArgument, "factorization needs a monic polynomial");
  if (p.degree() > degree_cap) {
    fail(ErrorCode::UnsupportedDegree,
         "degree " + std::to_string(p.degree()) + " exceeds cap " + std::to_string(degree_cap));
  }
}

}  // namespace

std::optional<IntPolynomial> find_factor(const IntPolynomial& p, int degree_cap) {
  check_input(p, degree_cap);
  const int n = p.degree();
  if (n == 1) return std::nullopt;
  if (!is_square_free(p)) {
    const auto rp = to_rational(p);
    return primitive_part(monic_gcd(rp, rp.derivative()));
  }
  const auto disks = detail::isolate_root_disks(p);
  require(!disks.empty(), ErrorCode::CannotCertify, "could not separate roots of " + to_string(p));
  for (int d = 1; d <= n / 2; ++d) {
    std::vector<int> idx(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i;
    std::vector<IntPolynomial> found;
    do {
      if (auto cand = round_product(disks, idx)) {
        if (divides_exactly(*cand, p)) found.push_back(*cand);
      }
    } while (next_combination(idx, n));
    if (!found.empty()) {
      return *std::min_element(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                            b.coeffs().end());
      });
    }
  }
  return std::nullopt;
}

bool is_irreducible(const IntPolynomial& p, int degree_cap) { return !find_factor(p, degree_cap).has_value(); }

std::vector<std::pair<IntPolynomial, int>> factor(const IntPolynomial& p, int degree_cap) {
  check_input(p, degree_cap);
  std::vector<IntPolynomial> pending{p};
  std::vector<IntPolynomial> irreducible;
  while (!pending.empty()) {
    IntPolynomial q = pending.back();
    pending.pop_back();
    if (q.degree() < 1) continue;
    auto f = find_factor(q, degree_cap);
    if (!f) {
      irreducible.push_back(q);
      continue;
    }
    IntPolynomial rest;
    divides_exactly(*f, q, &rest);
    pending.push_back(*f);
    pending.push_back(rest);
  }
  auto less = [](const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
  };
  std::sort(irreducible.begin(), irreducible.end(), less);
  std::vector<std::pair<IntPolynomial, int>> out;
  for (auto& f : irreducible) {
    if (!out.empty() && out.back().first == f) {
      ++out.back().second;
    } else {
      out.emplace_back(std::move(f), 1);
    }
  }
  return out;
}

}  // namespace silverline
