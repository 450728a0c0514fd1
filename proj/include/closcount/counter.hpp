#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "closcount/closure.hpp"
#include "closcount/decomposition.hpp"
#include "closcount/formulas.hpp"

namespace closcount {

struct CountOptions {
  std::size_t brute_force_cap = kDefaultBruteForceCap;
  bool force = false;
  unsigned threads = 1;
};

enum class TraceKind { SpecialCase, ComponentProduct, SummitSplit, BottleneckSplit, BruteForce };

/// One step of the recursion. Element sets are in the ids of the poset the
/// top-level call was made on; a quotient element stands for all ids it
/// absorbed.
///
/// Children by kind:
///   ComponentProduct: one per component, value = product
///   SummitSplit:      [quotient with T, suborder], value = q * s
///   BottleneckSplit:  [quotient with T ∪ {[S']}, suborder, quotient with T],
///                     value = q1 * 2 * (s - 1) + q0
struct TraceNode {
  TraceKind kind = TraceKind::BruteForce;
  std::size_t poset_size = 0;
  ElementSet required;
  BigCount value;
  Shape shape;
  std::string bottom_label;
  std::string top_label;
  ElementSet suborder;
  std::uint64_t subsets_checked = 0;
  std::vector<TraceNode> children;
};

struct CountStats {
  std::uint64_t subsets_checked = 0;
  std::uint64_t brute_force_runs = 0;
  std::uint64_t formula_hits = 0;
  std::uint64_t summit_splits = 0;
  std::uint64_t bottleneck_splits = 0;
  std::uint64_t component_splits = 0;
};

struct CountResult {
  BigCount count;
  TraceNode trace;
  CountStats stats;
};

/// Number of closure systems of `p` containing `required`, by recursive
/// decomposition along isolated suborders. Throws EmptyPoset, and TooLarge
/// when a brute-force leaf exceeds the cap without `force`.
CountResult count_closures(const Poset& p, const ElementSet& required,
                           const CountOptions& options = {});

inline CountResult count_closures(const Poset& p, const CountOptions& options = {}) {
  return count_closures(p, ElementSet(p.size()), options);
}

/// Twice the number of closure systems. Throws NoGreatestElement.
BigCount count_preclosure_systems(const Poset& p, const CountOptions& options = {});

/// Indented recursion tree, one line per node.
std::string explain(const TraceNode& trace);

/// Recomputes every internal node from its children.
bool trace_consistent(const TraceNode& trace);

/// Number of violations of: a chosen suborder never meets the active T, and
/// bottleneck suborders along one quotient sequence are pairwise disjoint.
std::size_t trace_disjointness_violations(const TraceNode& trace);

}  // namespace closcount
