#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "closcount/element_set.hpp"

namespace closcount {

/// A directed pair (lower, upper) with lower < upper.
struct CoverEdge {
  Element lower;
  Element upper;
  auto operator<=>(const CoverEdge&) const = default;
};

struct Restriction;

/// Finite poset stored as its Hasse diagram plus cached strict reachability.
///
/// Immutable after construction; every query is a pure read.
class Poset {
 public:
  Poset() = default;

  /// Builds the order generated by `edges` (reflexive-transitive closure) and
  /// keeps only its covers. Shortcut edges and duplicates are dropped,
  /// reflexive pairs are ignored. Throws CycleError on a directed cycle.
  static Poset from_cover_edges(std::size_t n, std::span<const CoverEdge> edges,
                                std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return upper_.size(); }
  bool empty() const noexcept { return upper_.empty(); }
  ElementSet all() const { return ElementSet::full(size()); }

  bool leq(Element x, Element y) const { return x == y || above_[x].contains(y); }
  bool less(Element x, Element y) const { return above_[x].contains(y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  /// Strict successors / predecessors.
  const ElementSet& above(Element x) const { return above_[x]; }
  const ElementSet& below(Element x) const { return below_[x]; }

  ElementSet up_set(Element x, const ElementSet& within) const;
  ElementSet down_set(Element x, const ElementSet& within) const;
  ElementSet interval(Element a, Element b) const;

  ElementSet maximal_elements() const;
  ElementSet minimal_elements() const;
  std::optional<Element> greatest() const;
  std::optional<Element> least() const;

  bool is_chain(const ElementSet& s) const;
  bool is_convex(const ElementSet& s) const;

  const std::vector<Element>& upper_covers(Element x) const { return upper_[x]; }
  const std::vector<Element>& lower_covers(Element x) const { return lower_[x]; }
  std::vector<CoverEdge> covers() const;
  std::size_t cover_count() const noexcept { return cover_count_; }

  /// Linear extension; smallest available id first.
  const std::vector<Element>& topological_order() const noexcept { return topo_; }

  /// Weakly connected components of the Hasse diagram, ordered by least member.
  std::vector<ElementSet> connected_components() const;

  /// Induced subposet on `s`; throws EmptySet when `s` is empty.
  Restriction restrict_to(const ElementSet& s) const;

  /// Distinct non-reflexive input edges that were not covers.
  std::size_t reduced_edge_count() const noexcept { return reduced_edges_; }

  std::string label(Element x) const;
  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  std::vector<ElementSet> above_;
  std::vector<ElementSet> below_;
  std::vector<Element> topo_;
  std::vector<std::string> labels_;
  std::size_t cover_count_ = 0;
  std::size_t reduced_edges_ = 0;
};

struct Restriction {
  Poset poset;
  std::vector<Element> to_original;
};

/// Hasse diagram with an artificial least element `bot` (id n) below every
/// minimal element and greatest element `top` (id n+1) above every maximal one.
struct AugmentedPoset {
  std::size_t base_size = 0;
  Element bot = 0;
  Element top = 0;
  std::vector<std::vector<Element>> successors;

  std::size_t node_count() const noexcept { return successors.size(); }
};

AugmentedPoset augment(const Poset& p);

enum class ShapeKind { Chain, Diamond, BottomlessDiamond, Other };

/// `param` is the length for chains and the belt width for (bottomless) diamonds.
struct Shape {
  ShapeKind kind = ShapeKind::Other;
  std::size_t param = 0;
  bool operator==(const Shape&) const = default;
};

/// Most specific shape; precedence Chain > Diamond > BottomlessDiamond > Other.
Shape detect_shape(const Poset& p);

std::string to_string(const Shape& s);

}  // namespace closcount
