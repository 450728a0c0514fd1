#pragma once

#include <optional>
#include <string>
#include <vector>

#include "closcount/poset.hpp"

namespace closcount {

enum class IsoKind { Bottleneck, Summit };

std::string to_string(IsoKind kind);

/// An interval [bottom, top] that the rest of the poset can enter only through
/// `bottom` and leave upwards only through `top`.
struct IsolatedSuborder {
  Element bottom = 0;
  Element top = 0;
  ElementSet members;
  IsoKind kind = IsoKind::Bottleneck;
};

/// Direct check of the three defining clauses.
bool is_isolated_suborder(const Poset& p, const ElementSet& s);

/// Neither a singleton nor the whole poset.
bool is_useful(const Poset& p, const ElementSet& s);

/// b > x, [x,b] is a chain, and every y > x lies in [x,b] or above b.
bool is_bottleneck(const Poset& p, Element x, Element b);

/// In a finite poset this is the unique upper cover of x, when there is
/// exactly one.
std::optional<Element> least_bottleneck(const Poset& p, Element x);

/// True iff every path s -> t in the augmented Hasse diagram passes through u.
/// Throws SameNode when u is s or t.
bool is_separator(const AugmentedPoset& g, Element u, Element s, Element t);

/// Inclusion-maximal useful isolated suborders whose top has a bottleneck.
/// Pairwise disjoint, ordered by bottom id.
std::vector<IsolatedSuborder> find_max_bottleneck_isos(const Poset& p);

/// For every maximal element, the inclusion-maximal useful isolated suborder
/// having it as top, if any. Ordered by top id.
std::vector<IsolatedSuborder> find_max_summit_isos(const Poset& p);

struct QuotientResult {
  Poset quotient;
  std::vector<Element> class_of;         // original element -> quotient element
  std::vector<ElementSet> flat_members;  // quotient element -> original ids
  Element collapsed = 0;                 // quotient element standing for the suborder
};

/// Collapses an isolated suborder to a single element. Throws NotIsolated.
QuotientResult quotient(const Poset& p, const ElementSet& members);
inline QuotientResult quotient(const Poset& p, const IsolatedSuborder& iso) {
  return quotient(p, iso.members);
}

}  // namespace closcount
