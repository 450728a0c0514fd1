#include "closcount/decomposition.hpp"

#include <algorithm>

namespace closcount {

std::string to_string(IsoKind kind) {
  return kind == IsoKind::Bottleneck ? "bottleneck" : "summit";
}

namespace {

std::optional<Element> least_of(const Poset& p, const ElementSet& s) {
  for (Element x : s)
    if ((s - p.above(x)).size() == 1) return x;
  return std::nullopt;
}

std::optional<Element> greatest_of(const Poset& p, const ElementSet& s) {
  for (Element x : s)
    if ((s - p.below(x)).size() == 1) return x;
  return std::nullopt;
}

}  // namespace

bool is_isolated_suborder(const Poset& p, const ElementSet& s) {
  auto bottom = least_of(p, s);
  auto top = greatest_of(p, s);
  if (!bottom || !top) return false;
  for (Element x = 0; x < p.size(); ++x) {
    if (s.contains(x)) continue;
    if (p.below(x).intersects(s) && !p.leq(*top, x)) return false;
    if (p.above(x).intersects(s) && !p.leq(x, *bottom)) return false;
  }
  return true;
}

bool is_useful(const Poset& p, const ElementSet& s) { return s.size() > 1 && s.size() < p.size(); }

bool is_bottleneck(const Poset& p, Element x, Element b) {
  if (!p.less(x, b)) return false;
  ElementSet chain = p.interval(x, b);
  if (!p.is_chain(chain)) return false;
  for (Element y : p.above(x))
    if (!chain.contains(y) && !p.less(b, y)) return false;
  return true;
}

std::optional<Element> least_bottleneck(const Poset& p, Element x) {
  const auto& covers = p.upper_covers(x);
  if (covers.size() != 1 || !is_bottleneck(p, x, covers.front())) return std::nullopt;
  return covers.front();
}

bool is_separator(const AugmentedPoset& g, Element u, Element s, Element t) {
  if (u == s || u == t) throw SameNode();
  std::vector<char> seen(g.node_count(), 0);
  std::vector<Element> stack{s};
  seen[s] = 1;
  seen[u] = 1;
  while (!stack.empty()) {
    Element x = stack.back();
    stack.pop_back();
    if (x == t) return false;
    for (Element y : g.successors[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  return true;
}

namespace {

bool separates_interval(const AugmentedPoset& g, Element v, Element b) {
  return is_separator(g, v, g.bot, b) && is_separator(g, b, v, g.top);
}

}  // namespace

std::vector<IsolatedSuborder> find_max_bottleneck_isos(const Poset& p) {
  const std::size_t n = p.size();
  const AugmentedPoset g = augment(p);

  std::vector<Element> tops;
  for (Element x : p.topological_order())
    if (p.upper_covers(x).size() == 1) tops.push_back(x);

  // For fixed v the accepted tops form a chain, so the last one in
  // topological order spans the largest interval.
  std::vector<IsolatedSuborder> candidates;
  for (Element v = 0; v < n; ++v) {
    std::optional<Element> last;
    for (Element b : tops)
      if (b != v && p.less(v, b) && separates_interval(g, v, b)) last = b;
    if (!last) continue;
    IsolatedSuborder iso{v, *last, p.interval(v, *last), IsoKind::Bottleneck};
    if (is_useful(p, iso.members)) candidates.push_back(std::move(iso));
  }

  std::vector<IsolatedSuborder> result;
  for (const auto& c : candidates) {
    bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const auto& d) {
      return d.bottom != c.bottom && c.members.is_subset_of(d.members);
    });
    if (!dominated) result.push_back(c);
  }
  return result;
}

std::vector<IsolatedSuborder> find_max_summit_isos(const Poset& p) {
  const AugmentedPoset g = augment(p);
  std::vector<IsolatedSuborder> result;
  for (Element m : p.maximal_elements()) {
    std::optional<IsolatedSuborder> best;
    for (Element v : p.below(m)) {
      if (!separates_interval(g, v, m)) continue;
      ElementSet members = p.interval(v, m);
      if (!is_useful(p, members)) continue;
      if (!best || members.size() > best->members.size())
        best = IsolatedSuborder{v, m, std::move(members), IsoKind::Summit};
    }
    if (best) result.push_back(std::move(*best));
  }
  return result;
}

QuotientResult quotient(const Poset& p, const ElementSet& members) {
  if (!is_isolated_suborder(p, members)) throw NotIsolated();
  const std::size_t n = p.size();
  const Element bottom = *least_of(p, members);
  const Element top = *greatest_of(p, members);

  QuotientResult r;
  r.class_of.assign(n, 0);
  std::vector<std::string> labels;
  std::optional<Element> collapsed;
  Element next = 0;
  for (Element x = 0; x < n; ++x) {
    if (members.contains(x)) {
      if (!collapsed) {
        collapsed = next++;
        labels.push_back(members.size() == 1 ? p.label(x)
                                             : "[" + p.label(bottom) + ".." + p.label(top) + "]");
      }
      r.class_of[x] = *collapsed;
    } else {
      r.class_of[x] = next++;
      labels.push_back(p.label(x));
    }
  }
  r.collapsed = *collapsed;
  r.flat_members.assign(next, ElementSet(n));
  for (Element x = 0; x < n; ++x) r.flat_members[r.class_of[x]].insert(x);

  std::vector<CoverEdge> edges;
  for (const CoverEdge& e : p.covers()) {
    Element u = r.class_of[e.lower], v = r.class_of[e.upper];
    if (u != v) edges.push_back({u, v});
  }
  r.quotient = Poset::from_cover_edges(next, edges, std::move(labels));
  return r;
}

}  // namespace closcount
