#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fbranch {

struct HarnessOptions {
  std::uint64_t seed = 1;
  std::size_t n = 0;                  // size budget; 0 picks each suite's default
  std::optional<std::string> only;    // run a single suite
  bool inject_fault = false;          // corrupt solver results to self-test the harness
};

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<std::string> counterexamples;  // one text document per violation (capped)
};

std::vector<std::string> harness_suite_names();
// Throws Error for an unknown suite in `only`.
std::vector<SuiteResult> run_lemma_harness(const HarnessOptions& opts);

}  // namespace fbranch
