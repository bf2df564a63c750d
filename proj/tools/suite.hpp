#pragma once

#include <functional>
#include <string>

namespace silverline::suite {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

using ProgressSink = std::function<void(const std::string&)>;

inline constexpr int kCriterionCount = 12;

/// Runs acceptance criterion `id` (1..12). Exceptions become FAIL results.
CriterionResult run_criterion(int id, const ProgressSink& progress = {});

/// "PASS  3 normal-form suite (1.52 s / 120 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace silverline::suite
