#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rposet/generators.hpp"

namespace rposet {

struct SelftestOptions {
  std::size_t trials = 100;
  std::size_t max_n = 12;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct PropertyTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::string first_failure;  // "trial <i>: <detail>"
};

struct SelftestResult {
  SelftestOptions options;
  std::vector<PropertyTally> properties;

  bool ok() const;
  /// key=value lines; identical for identical options regardless of threads.
  std::string render() const;
};

/// The GenSpec used for a given trial: generator kind rotates with the trial
/// index, everything else is drawn from the (seed, trial) stream.
GenSpec trial_spec(std::uint64_t seed, std::size_t trial, std::size_t max_n);

/// Generates one poset per trial and runs every module's property checks on it.
SelftestResult run_selftest(const SelftestOptions& options);

}  // namespace rposet
