#pragma once

// Generated by mu_oracle.py: min |q(rho)| over nonzero q(rho), coefficients in
// {-1, 0, 1}, degree <= bound, with the count of exact zeros.

#include <array>
#include <vector>

namespace oracle {

struct MuRow {
  const char* name;
  std::vector<long> poly;
  int bound;
  const char* min_lo;
  const char* min_hi;
  long long zeros;
};

inline const std::vector<MuRow> kMuValues = {
    {"golden", {-1, -1, 1}, 2, "0.61803398874989484", "0.61803398874989485", 3},
    {"golden", {-1, -1, 1}, 4, "0.61803398874989484", "0.61803398874989485", 9},
    {"golden", {-1, -1, 1}, 6, "0.61803398874989484", "0.61803398874989485", 31},
    {"golden", {-1, -1, 1}, 8, "0.61803398874989484", "0.61803398874989485", 105},
    {"golden", {-1, -1, 1}, 10, "0.61803398874989484", "0.61803398874989485", 355},
    {"tribonacci", {-1, -1, -1, 1}, 4, "0.54368901269207636", "0.54368901269207637", 5},
    {"tribonacci", {-1, -1, -1, 1}, 6, "0.54368901269207636", "0.54368901269207637", 11},
    {"tribonacci", {-1, -1, -1, 1}, 8, "0.54368901269207636", "0.54368901269207637", 31},
    {"plastic", {-1, -1, 0, 1}, 4, "0.18503737524863949", "0.18503737524863950", 7},
    {"plastic", {-1, -1, 0, 1}, 6, "0.10544175175720070", "0.10544175175720071", 35},
    {"plastic", {-1, -1, 0, 1}, 8, "0.07959562349143878", "0.07959562349143879", 167},
    {"plastic", {-1, -1, 0, 1}, 10, "0.07959562349143878", "0.07959562349143879", 845},
};

inline constexpr long long kGoldenZerosAt10 = 355;

}  // namespace oracle
