#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "closcount/counter.hpp"

namespace closcount {

struct SelfCheckConfig {
  std::uint64_t seed = 1;
  std::size_t instances = 200;
  std::size_t max_size = 9;
  std::size_t max_required = 3;
  CountOptions count;
};

struct SelfCheckReport {
  std::size_t instances = 0;
  std::size_t agreed = 0;
  std::size_t inconsistent_traces = 0;
  std::size_t disjointness_violations = 0;
  std::optional<std::string> counterexample;

  bool ok() const {
    return agreed == instances && inconsistent_traces == 0 && disjointness_violations == 0;
  }
};

/// Random connected posets of 1..max_size elements with random required sets
/// of at most max_required elements: decomposition count vs brute force, plus
/// trace consistency and disjointness. Throws std::invalid_argument when
/// max_size exceeds the brute-force cap.
SelfCheckReport run_selfcheck(const SelfCheckConfig& config);

}  // namespace closcount
