#ifndef FERRERS_SELFTEST_HPP
#define FERRERS_SELFTEST_HPP

#include <string>
#include <vector>

#include "ferrers/partition.hpp"

namespace ferrers {

struct CheckResult {
  std::string name;
  bool passed = false;
  long long checks = 0;       // individual comparisons performed
  std::string detail;         // first failure, empty when passed
};

/// Runs the full cross-validation suite (closed forms against brute-force
/// oracles on small instances). Deterministic.
std::vector<CheckResult> run_selftest();

/// All partitions with 1..max_boxes boxes, every shape.
std::vector<Partition> all_partitions_up_to(int max_boxes);

/// All ab-words of length 0..max_length.
std::vector<ABWord> all_words_up_to(int max_length);

}  // namespace ferrers

#endif
