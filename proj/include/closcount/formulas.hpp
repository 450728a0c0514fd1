#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "closcount/closure.hpp"

namespace closcount {

/// How a required set T sits in a special shape.
struct ConstraintSummary {
  bool contains_bottom = false;
  std::size_t belt_hits = 0;  // for chains: |T \ {top}|
  bool contains_top = false;
};

struct ConstrainedCount {
  BigCount value;
  Shape shape;
  ConstraintSummary summary;
};

/// 2^(n-1-|T\{top}|).
BigCount count_chain(std::size_t length, std::size_t constrained_below_top);

/// Diamond of width n with belt B:
///   bottom in T            -> 2^(n-|T∩B|)
///   bottom not in T, |T∩B|>1 -> 2^(n-|T∩B|)
///   bottom not in T, |T∩B|=1 -> 2^(n-1)+1
///   bottom not in T, T∩B=∅   -> 2^n+n+1
BigCount count_diamond(std::size_t width, const ConstraintSummary& t);

/// Every subset containing the top is a closure system: 2^(n-|T∩B|).
BigCount count_bottomless_diamond(std::size_t width, const ConstraintSummary& t);

/// Closed form for chains, diamonds and bottomless diamonds; nullopt otherwise.
std::optional<ConstrainedCount> count_special_shape(const Poset& p, const ElementSet& required);

using ComponentCounter = std::function<BigCount(const Poset&, const ElementSet&)>;

/// Product over the connected components, each counted with its share of T.
BigCount count_disconnected(const Poset& p, const ElementSet& required,
                            const ComponentCounter& component_counter);

}  // namespace closcount
