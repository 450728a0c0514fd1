#pragma once

// Test-only reference implementations. They work on a dense relation matrix
// closed by Warshall's algorithm and enumerate every subset directly, so they
// share no code path with the library's reachability or subset search.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "closcount/poset.hpp"

namespace closcount::testing {

struct Relation {
  std::size_t n = 0;
  std::vector<std::vector<bool>> leq;

  static Relation from_edges(std::size_t n, const std::vector<CoverEdge>& edges) {
    Relation r{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
    for (std::size_t i = 0; i < n; ++i) r.leq[i][i] = true;
    for (const auto& e : edges) r.leq[e.lower][e.upper] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (r.leq[i][k] && r.leq[k][j]) r.leq[i][j] = true;
    return r;
  }
  static Relation of(const Poset& p) { return from_edges(p.size(), p.covers()); }
};

inline bool naive_is_closure_system(const Relation& r, std::uint64_t members) {
  for (std::size_t s = 0; s < r.n; ++s) {
    bool has_least = false;
    for (std::size_t m = 0; m < r.n && !has_least; ++m) {
      if (!(members >> m & 1) || !r.leq[s][m]) continue;
      bool least = true;
      for (std::size_t y = 0; y < r.n; ++y)
        if ((members >> y & 1) && r.leq[s][y] && !r.leq[m][y]) least = false;
      has_least = least;
    }
    if (!has_least) return false;
  }
  return true;
}

/// Closure systems containing `required`, over all 2^n subsets.
inline mpz_class naive_count(const Relation& r, std::uint64_t required = 0) {
  mpz_class count = 0;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << r.n); ++c)
    if ((c & required) == required && naive_is_closure_system(r, c)) ++count;
  return count;
}

inline std::uint64_t mask_of(const ElementSet& s) {
  std::uint64_t m = 0;
  for (Element x : s) m |= std::uint64_t{1} << x;
  return m;
}

inline bool naive_is_isolated(const Relation& r, std::uint64_t s) {
  if (!s) return false;
  auto in = [&](std::size_t x) { return (s >> x & 1) != 0; };
  std::optional<std::size_t> bottom, top;
  for (std::size_t x = 0; x < r.n; ++x) {
    if (!in(x)) continue;
    bool is_bottom = true, is_top = true;
    for (std::size_t y = 0; y < r.n; ++y) {
      if (!in(y)) continue;
      if (!r.leq[x][y]) is_bottom = false;
      if (!r.leq[y][x]) is_top = false;
    }
    if (is_bottom) bottom = x;
    if (is_top) top = x;
  }
  if (!bottom || !top) return false;
  for (std::size_t x = 0; x < r.n; ++x) {
    if (in(x)) continue;
    for (std::size_t y = 0; y < r.n; ++y) {
      if (!in(y)) continue;
      if (r.leq[y][x] && !r.leq[*top][x]) return false;
      if (r.leq[x][y] && !r.leq[x][*bottom]) return false;
    }
  }
  return true;
}

/// Random DAG edges on a shuffled order; not necessarily connected.
inline std::vector<CoverEdge> random_dag_edges(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Element> order(n);
  for (Element i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<CoverEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({order[i], order[j]});
  return edges;
}

/// Random poset with a greatest element: a random DAG on n-1 elements plus a
/// top above everything.
inline Poset random_poset_with_top(std::size_t n, std::mt19937_64& rng) {
  auto edges = random_dag_edges(n - 1, 0.35, rng);
  for (Element x = 0; x + 1 < n; ++x) edges.push_back({x, static_cast<Element>(n - 1)});
  return Poset::from_cover_edges(n, edges);
}

}  // namespace closcount::testing
