#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>

#include "closcount/counter.hpp"

namespace closcount {

struct BenchRow {
  std::string name;
  std::size_t size = 0;
  double brute_force_seconds = 0;
  double decomposition_seconds = 0;
  BigCount count;
  bool agree = false;
  std::uint64_t brute_force_subsets = 0;
  std::uint64_t decomposition_subsets = 0;
};

/// Counts `p` once by direct brute force and once by decomposition.
BenchRow bench_instance(std::string name, const Poset& p, const CountOptions& options = {});

/// Header plus one line per row.
void write_csv(std::ostream& os, std::span<const BenchRow> rows);

}  // namespace closcount
