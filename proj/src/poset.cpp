#include "closcount/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace closcount {

CycleError::CycleError(std::vector<Element> cycle)
    : Error([&] {
        std::ostringstream os;
        os << "cycle:";
        for (Element e : cycle) os << ' ' << e << " ->";
        if (!cycle.empty()) os << ' ' << cycle.front();
        return os.str();
      }()),
      cycle_(std::move(cycle)) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

TooLarge::TooLarge(std::size_t size, std::size_t cap)
    : Error("brute force refused: " + std::to_string(size) + " elements exceeds cap " +
            std::to_string(cap)),
      size_(size),
      cap_(cap) {}

std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

namespace {

// Any directed cycle among the nodes Kahn's algorithm could not remove.
std::vector<Element> find_cycle(const std::vector<std::vector<Element>>& out,
                                const std::vector<std::size_t>& indegree) {
  const std::size_t n = out.size();
  std::vector<int> color(n, 0);
  std::vector<Element> parent(n, 0);
  for (Element start = 0; start < n; ++start) {
    if (indegree[start] == 0 || color[start] != 0) continue;
    // Iterative DFS; stack holds (node, next child index).
    std::vector<std::pair<Element, std::size_t>> stack{{start, 0}};
    color[start] = 1;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < out[u].size()) {
        Element v = out[u][i++];
        if (color[v] == 1) {
          std::vector<Element> cycle{v};
          for (Element w = u; w != v; w = parent[w]) cycle.push_back(w);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;
        }
        if (color[v] == 0) {
          color[v] = 1;
          parent[v] = u;
          stack.emplace_back(v, 0);
        }
      } else {
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

}  // namespace

Poset Poset::from_cover_edges(std::size_t n, std::span<const CoverEdge> edges,
                              std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n)
    throw std::invalid_argument("label count does not match element count");

  std::vector<std::vector<Element>> out(n);
  for (const CoverEdge& e : edges) {
    if (e.lower >= n || e.upper >= n) throw std::out_of_range("edge endpoint outside 0..n-1");
    if (e.lower != e.upper) out[e.lower].push_back(e.upper);
  }
  std::size_t distinct = 0;
  for (auto& succ : out) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    distinct += succ.size();
  }

  std::vector<std::size_t> indegree(n, 0);
  for (const auto& succ : out)
    for (Element v : succ) ++indegree[v];

  std::vector<Element> topo;
  topo.reserve(n);
  {
    auto remaining = indegree;
    std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
    for (Element v = 0; v < n; ++v)
      if (remaining[v] == 0) ready.push(v);
    while (!ready.empty()) {
      Element u = ready.top();
      ready.pop();
      topo.push_back(u);
      for (Element v : out[u])
        if (--remaining[v] == 0) ready.push(v);
    }
    if (topo.size() != n) throw CycleError(find_cycle(out, remaining));
  }

  Poset p;
  p.above_.assign(n, ElementSet(n));
  p.below_.assign(n, ElementSet(n));
  p.upper_.resize(n);
  p.lower_.resize(n);
  p.topo_ = std::move(topo);
  p.labels_ = std::move(labels);

  for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
    Element u = *it;
    for (Element v : out[u]) {
      p.above_[u].insert(v);
      p.above_[u] |= p.above_[v];
    }
  }
  for (Element u = 0; u < n; ++u)
    for (Element v : p.above_[u]) p.below_[v].insert(u);

  // (u,v) is a cover iff v is not reachable through another successor of u.
  for (Element u = 0; u < n; ++u) {
    ElementSet longer(n);
    for (Element w : out[u]) longer |= p.above_[w];
    for (Element v : out[u]) {
      if (longer.contains(v)) continue;
      p.upper_[u].push_back(v);
      p.lower_[v].push_back(u);
      ++p.cover_count_;
    }
  }
  for (auto& lower : p.lower_) std::sort(lower.begin(), lower.end());
  p.reduced_edges_ = distinct - p.cover_count_;
  return p;
}

ElementSet Poset::up_set(Element x, const ElementSet& within) const {
  ElementSet r = above_[x] & within;
  if (within.contains(x)) r.insert(x);
  return r;
}

ElementSet Poset::down_set(Element x, const ElementSet& within) const {
  ElementSet r = below_[x] & within;
  if (within.contains(x)) r.insert(x);
  return r;
}

ElementSet Poset::interval(Element a, Element b) const {
  if (!leq(a, b)) return ElementSet(size());
  ElementSet r = above_[a] & below_[b];
  r.insert(a);
  r.insert(b);
  return r;
}

ElementSet Poset::maximal_elements() const {
  ElementSet r(size());
  for (Element x = 0; x < size(); ++x)
    if (upper_[x].empty()) r.insert(x);
  return r;
}

ElementSet Poset::minimal_elements() const {
  ElementSet r(size());
  for (Element x = 0; x < size(); ++x)
    if (lower_[x].empty()) r.insert(x);
  return r;
}

std::optional<Element> Poset::greatest() const {
  auto maxima = maximal_elements();
  if (maxima.size() != 1) return std::nullopt;
  return maxima.first();
}

std::optional<Element> Poset::least() const {
  auto minima = minimal_elements();
  if (minima.size() != 1) return std::nullopt;
  return minima.first();
}

bool Poset::is_chain(const ElementSet& s) const {
  for (Element x : s)
    if (!(s - above_[x] - below_[x]).is_subset_of(ElementSet(size(), {x}))) return false;
  return true;
}

bool Poset::is_convex(const ElementSet& s) const {
  // Everything between two members: union of (above(x) ∩ below(y)).
  ElementSet up(size()), down(size());
  for (Element x : s) {
    up |= above_[x];
    down |= below_[x];
  }
  return (up & down).is_subset_of(s);
}

std::vector<CoverEdge> Poset::covers() const {
  std::vector<CoverEdge> r;
  r.reserve(cover_count_);
  for (Element u = 0; u < size(); ++u)
    for (Element v : upper_[u]) r.push_back({u, v});
  return r;
}

std::vector<ElementSet> Poset::connected_components() const {
  const std::size_t n = size();
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), Element{0});
  std::function<Element(Element)> find = [&](Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Element u = 0; u < n; ++u)
    for (Element v : upper_[u]) parent[find(u)] = find(v);

  std::vector<ElementSet> components;
  std::vector<std::optional<std::size_t>> slot(n);
  for (Element x = 0; x < n; ++x) {
    Element root = find(x);
    if (!slot[root]) {
      slot[root] = components.size();
      components.emplace_back(n);
    }
    components[*slot[root]].insert(x);
  }
  return components;
}

Restriction Poset::restrict_to(const ElementSet& s) const {
  if (s.empty()) throw EmptySet();
  Restriction r;
  r.to_original = s.to_vector();
  const std::size_t k = r.to_original.size();
  std::vector<Element> local(size(), 0);
  for (Element i = 0; i < k; ++i) local[r.to_original[i]] = i;

  std::vector<CoverEdge> edges;
  for (Element i = 0; i < k; ++i)
    for (Element y : above_[r.to_original[i]] & s) edges.push_back({i, local[y]});
  std::vector<std::string> labels;
  if (has_labels())
    for (Element x : r.to_original) labels.push_back(labels_[x]);
  r.poset = from_cover_edges(k, edges, std::move(labels));
  return r;
}

std::string Poset::label(Element x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

AugmentedPoset augment(const Poset& p) {
  const std::size_t n = p.size();
  AugmentedPoset g;
  g.base_size = n;
  g.bot = static_cast<Element>(n);
  g.top = static_cast<Element>(n + 1);
  g.successors.resize(n + 2);
  for (Element x = 0; x < n; ++x) {
    g.successors[x] = p.upper_covers(x);
    if (p.upper_covers(x).empty()) g.successors[x].push_back(g.top);
    if (p.lower_covers(x).empty()) g.successors[g.bot].push_back(x);
  }
  if (n == 0) g.successors[g.bot].push_back(g.top);
  return g;
}

Shape detect_shape(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return {};
  if (p.is_chain(p.all())) return {ShapeKind::Chain, n};

  auto top = p.greatest();
  if (!top) return {};
  // Belt: everything except top (and bottom), pairwise incomparable.
  ElementSet belt = p.all();
  belt.erase(*top);
  auto bottom = p.least();
  if (bottom) belt.erase(*bottom);
  for (Element b : belt)
    if (p.above(b).intersects(belt)) return {};
  if (bottom && n >= 4) return {ShapeKind::Diamond, n - 2};
  if (!bottom && n >= 3) return {ShapeKind::BottomlessDiamond, n - 1};
  return {};
}

std::string to_string(const Shape& s) {
  switch (s.kind) {
    case ShapeKind::Chain:
      return "chain n=" + std::to_string(s.param);
    case ShapeKind::Diamond:
      return "diamond width=" + std::to_string(s.param);
    case ShapeKind::BottomlessDiamond:
      return "bottomless diamond width=" + std::to_string(s.param);
    case ShapeKind::Other:
      break;
  }
  return "other";
}

}  // namespace closcount
