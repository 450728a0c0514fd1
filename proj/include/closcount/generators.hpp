#pragma once

#include <cstddef>
#include <random>
#include <string_view>

#include "closcount/poset.hpp"

namespace closcount {

Poset make_chain(std::size_t n);
Poset make_antichain(std::size_t n);
/// Ids: 0 = bottom, 1..width = belt, width+1 = top.
Poset make_diamond(std::size_t width);
/// Ids: 0..width-1 = belt, width = top.
Poset make_bottomless_diamond(std::size_t width);
/// Subsets of {1..k} ordered by inclusion; id = bitmask.
Poset make_powerset(std::size_t k);
/// `levels` copies of `base`, every element of copy i below every element of
/// copy i+1. Copy i occupies ids i*|base| .. (i+1)*|base|-1.
Poset make_stacked(const Poset& base, std::size_t levels);
/// `a` followed by `b` with ids shifted by |a|; no relations between them.
Poset make_disjoint_union(const Poset& a, const Poset& b);

/// Random DAG over a shuffled linear order with edge probability min(1, 3/n),
/// resampled until the Hasse diagram is connected.
Poset random_connected_poset(std::size_t n, std::mt19937_64& rng);

/// "chain:7", "diamond:3", "bottomless:2", "powerset:3", "antichain:4",
/// "stacked:k" (over powerset:2) or "stacked:k:<family>:<n>".
/// Throws std::invalid_argument on a malformed spec.
Poset generate_family(std::string_view spec);

}  // namespace closcount
