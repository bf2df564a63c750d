#include <iostream>

#include "suite.hpp"

int main() {
  using namespace silverline::suite;
  int failed = 0;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const CriterionResult r = run_criterion(id, [](const std::string& msg) { std::cout << "  progress " << msg << "\n"; });
    std::cout << format_result(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (kCriterionCount - failed) << "/" << kCriterionCount << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
