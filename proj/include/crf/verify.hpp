#pragma once

// Executable identity suites over bounded universes of forests, classes, words
// and compositions. Instances are visited in ascending (total vertex count,
// canonical order), so the first failure listed is the smallest one.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "crf/forest.hpp"
#include "crf/nsym.hpp"

namespace crf {

struct VerifyConfig {
  ColorTable colors;
  WeightMap weights;   // must cover every color
  std::size_t bound = 4;  // max total vertex count of the instances
};

struct InstanceResult {
  std::string identity;  // which identity within the suite
  std::string instance;  // the inputs, as text keys
  bool ok = true;
  std::string detail;    // term-by-term counterexample when !ok
};

struct SuiteReport {
  std::string suite;
  std::size_t bound = 0;
  std::vector<InstanceResult> instances;

  std::size_t checked() const noexcept { return instances.size(); }
  std::size_t failed() const noexcept;
  bool passed() const noexcept { return failed() == 0; }
};

/// Names accepted by run_suite, in the order `verify all` runs them.
const std::vector<std::string>& suite_names();

/// Throws crf::Error for an unknown suite name.
SuiteReport run_suite(std::string_view suite, const VerifyConfig& config);

std::vector<SuiteReport> run_all_suites(const VerifyConfig& config);

/// Every sequence of nonzero classes with total vertex count <= bound, sorted
/// by (total, sequence). Serves as both the word and the composition universe.
std::vector<std::vector<K0Class>> class_sequences_up_to(std::size_t num_colors, std::size_t bound);

/// Every sequence of nonzero classes summing to `alpha`.
std::vector<std::vector<K0Class>> class_sequences_of(const K0Class& alpha);

}  // namespace crf
