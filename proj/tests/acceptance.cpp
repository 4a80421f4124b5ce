// Runs the cross-validation suite and prints one line per criterion.

#include <cstdio>

#include "ferrers/selftest.hpp"

int main() {
  bool all_passed = true;
  int index = 0;
  for (const ferrers::CheckResult& result : ferrers::run_selftest()) {
    ++index;
    all_passed = all_passed && result.passed;
    std::printf("%s  criterion %2d: %s (%lld checks)%s%s\n",
                result.passed ? "PASS" : "FAIL", index, result.name.c_str(),
                result.checks, result.detail.empty() ? "" : " -- ",
                result.detail.c_str());
  }
  return all_passed ? 0 : 1;
}
