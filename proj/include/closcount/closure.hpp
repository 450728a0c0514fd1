#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "closcount/poset.hpp"

namespace closcount {

using BigCount = mpz_class;

inline constexpr std::size_t kDefaultBruteForceCap = 22;

/// Endofunction on the elements of a poset, `image[x]` = c(x).
struct ClosureOperator {
  std::vector<Element> image;
  bool operator==(const ClosureOperator&) const = default;
};

/// Least element of {y in c | x <= y}, if it exists.
std::optional<Element> least_majorizer(const Poset& p, Element x, const ElementSet& c);

/// Every element has a least majorizer in `c`.
bool is_closure_system(const Poset& p, const ElementSet& c);

/// Extensive, isotone and idempotent.
bool is_closure_operator(const Poset& p, const ClosureOperator& f);

/// x -> least majorizer of x in `c`. Throws std::invalid_argument when `c` is
/// not a closure system.
ClosureOperator operator_from_system(const Poset& p, const ElementSet& c);

/// Fixpoints of `f`. Throws InvalidOperator when `f` is not a closure operator.
ElementSet system_from_operator(const Poset& p, const ClosureOperator& f);

/// c ∪ {top} is a closure system. Throws NoGreatestElement.
bool is_preclosure_system(const Poset& p, const ElementSet& c);

struct BruteForceOptions {
  std::size_t cap = kDefaultBruteForceCap;
  bool force = false;
  unsigned threads = 1;
};

struct BruteForceStats {
  std::uint64_t subsets_checked = 0;
  std::uint64_t runs = 0;
};

/// Calls `visit` once per closure system containing `required`, ascending by
/// the bitmask over the free elements (ids that are neither required nor
/// maximal, in increasing id order). Throws TooLarge above the cap.
void for_each_closure_system(const Poset& p, const ElementSet& required,
                             const std::function<void(const ElementSet&)>& visit,
                             const BruteForceOptions& options = {});

std::vector<ElementSet> enumerate_closure_systems(const Poset& p, const ElementSet& required,
                                                  const BruteForceOptions& options = {});

/// |{C closure system | required ⊆ C}| by exhaustive search over the free
/// elements. Work may be split across `options.threads` workers; the result
/// does not depend on the worker count.
BigCount count_closure_systems_bruteforce(const Poset& p, const ElementSet& required,
                                          const BruteForceOptions& options = {},
                                          BruteForceStats* stats = nullptr);

}  // namespace closcount
