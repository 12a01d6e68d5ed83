// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <iostream>

#include "copsrobber/verify.hpp"

int main() {
  using namespace copsrobber;
  int failed = 0;
  for (int id = 1; id <= 11; ++id) {
    const auto r = run_criterion(id);
    if (!r.passed) ++failed;
    std::cout << format_check(r) << std::endl;
  }
  std::cout << (11 - failed) << "/11 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
