#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "silverline/sigma_int.hpp"

namespace oracle {

using silverline::FieldElement;
using silverline::SigmaInt;
using silverline::SilverBase;

/// Every bit vector of degree <= max_degree, zero included.
inline std::vector<SigmaInt> all_reps(int max_degree) {
  std::vector<SigmaInt> out{SigmaInt()};
  for (int len = 1; len <= max_degree + 1; ++len) {
    for (unsigned long mask = 1UL << (len - 1); mask < (1UL << len); ++mask) {
      std::vector<std::uint8_t> bits;
      for (int k = len - 1; k >= 0; --k) bits.push_back(static_cast<std::uint8_t>((mask >> k) & 1UL));
      out.emplace_back(std::move(bits));
    }
  }
  return out;
}

/// Independent window test: no run of n ones.
inline bool no_long_run(const SigmaInt& x, int n) {
  const auto& b = x.bits();
  for (size_t k = 0; k + static_cast<size_t>(n) <= b.size(); ++k) {
    bool all = true;
    for (size_t j = k; j < k + static_cast<size_t>(n); ++j) all = all && b[j];
    if (all) return false;
  }
  return true;
}

inline std::vector<SigmaInt> all_normal_forms(int n, int max_degree) {
  std::vector<SigmaInt> out;
  for (auto& r : all_reps(max_degree))
    if (no_long_run(r, n)) out.push_back(r);
  return out;
}

struct Valued {
  FieldElement value;
  SigmaInt rep;
};

/// Distinct values of all bit vectors of degree <= max_degree, ascending.
/// Equal values are merged exactly; the lexicographically smallest rep is kept.
inline std::vector<Valued> sorted_values(const SilverBase& base, int max_degree) {
  std::map<std::vector<silverline::Rational>, Valued, std::less<>> unique;
  for (auto& r : all_reps(max_degree)) {
    FieldElement v = silverline::value_of(r, base);
    auto it = unique.find(v.coords());
    if (it == unique.end()) unique.emplace(v.coords(), Valued{v, r});
  }
  std::vector<Valued> out;
  for (auto& [k, v] : unique) out.push_back(v);
  std::sort(out.begin(), out.end(), [&](const Valued& a, const Valued& b) {
    return silverline::field_sign(a.value - b.value, base.root) < 0;
  });
  return out;
}

}  // namespace oracle
