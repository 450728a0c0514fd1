#include "closcount/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>
#include <vector>

namespace closcount {

Poset make_chain(std::size_t n) {
  std::vector<CoverEdge> edges;
  for (Element i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Poset::from_cover_edges(n, edges);
}

Poset make_antichain(std::size_t n) { return Poset::from_cover_edges(n, {}); }

Poset make_diamond(std::size_t width) {
  const auto top = static_cast<Element>(width + 1);
  std::vector<CoverEdge> edges;
  for (Element b = 1; b <= width; ++b) {
    edges.push_back({0, b});
    edges.push_back({b, top});
  }
  return Poset::from_cover_edges(width + 2, edges);
}

Poset make_bottomless_diamond(std::size_t width) {
  const auto top = static_cast<Element>(width);
  std::vector<CoverEdge> edges;
  for (Element b = 0; b < width; ++b) edges.push_back({b, top});
  return Poset::from_cover_edges(width + 1, edges);
}

Poset make_powerset(std::size_t k) {
  if (k > 20) throw std::invalid_argument("powerset base too large");
  const std::size_t n = std::size_t{1} << k;
  std::vector<CoverEdge> edges;
  std::vector<std::string> labels;
  for (Element s = 0; s < n; ++s) {
    std::string label = "{";
    for (std::size_t i = 0; i < k; ++i) {
      if (s >> i & 1) {
        if (label.size() > 1) label += ',';
        label += std::to_string(i + 1);
      } else {
        edges.push_back({s, s | (Element{1} << i)});
      }
    }
    labels.push_back(label + "}");
  }
  return Poset::from_cover_edges(n, edges, std::move(labels));
}

Poset make_stacked(const Poset& base, std::size_t levels) {
  const std::size_t m = base.size();
  std::vector<CoverEdge> edges;
  std::vector<std::string> labels;
  const auto maxima = base.maximal_elements();
  const auto minima = base.minimal_elements();
  for (std::size_t level = 0; level < levels; ++level) {
    const auto offset = static_cast<Element>(level * m);
    for (const CoverEdge& e : base.covers()) edges.push_back({e.lower + offset, e.upper + offset});
    if (level + 1 < levels)
      for (Element hi : maxima)
        for (Element lo : minima) edges.push_back({hi + offset, static_cast<Element>(lo + offset + m)});
    for (Element x = 0; x < m; ++x) labels.push_back(base.label(x) + "@" + std::to_string(level));
  }
  return Poset::from_cover_edges(m * levels, edges, std::move(labels));
}

Poset make_disjoint_union(const Poset& a, const Poset& b) {
  std::vector<CoverEdge> edges = a.covers();
  const auto shift = static_cast<Element>(a.size());
  for (const CoverEdge& e : b.covers()) edges.push_back({e.lower + shift, e.upper + shift});
  return Poset::from_cover_edges(a.size() + b.size(), edges);
}

Poset random_connected_poset(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) return {};
  const double p = std::min(1.0, 3.0 / static_cast<double>(n));
  std::bernoulli_distribution coin(p);
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  for (;;) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<CoverEdge> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) edges.push_back({order[i], order[j]});
    Poset poset = Poset::from_cover_edges(n, edges);
    if (poset.connected_components().size() == 1) return poset;
  }
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad family parameter in '" + std::string(spec) + "'");
  return value;
}

}  // namespace

Poset generate_family(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("family spec must look like name:n, got '" + std::string(spec) + "'");
  std::string_view name = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);

  if (name == "stacked") {
    auto next = rest.find(':');
    std::size_t levels = parse_count(rest.substr(0, next), spec);
    if (levels == 0) throw std::invalid_argument("stacked needs at least one level");
    Poset base = next == std::string_view::npos ? make_powerset(2) : generate_family(rest.substr(next + 1));
    return make_stacked(base, levels);
  }

  std::size_t n = parse_count(rest, spec);
  if (name == "chain") return make_chain(n);
  if (name == "antichain") return make_antichain(n);
  if (name == "diamond") return make_diamond(n);
  if (name == "bottomless") return make_bottomless_diamond(n);
  if (name == "powerset") return make_powerset(n);
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

}  // namespace closcount
