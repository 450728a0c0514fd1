#include <random>

#include "gtest/gtest.h"

#include "closcount/counter.hpp"
#include "closcount/generators.hpp"
#include "closcount/poset_io.hpp"
#include "oracle.hpp"

namespace closcount {
namespace {

using testing::mask_of;
using testing::naive_count;
using testing::Relation;

// c0 < c1 < bottom < b1, b2 < top; ids in that order.
Poset GluedChainDiamond() {
  return Poset::from_cover_edges(6, std::vector<CoverEdge>{{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
}

std::size_t depth(const TraceNode& node) {
  std::size_t d = 0;
  for (const auto& c : node.children) d = std::max(d, depth(c));
  return d + 1;
}

bool sizes_shrink(const TraceNode& node) {
  for (const auto& c : node.children)
    if (c.poset_size >= node.poset_size || !sizes_shrink(c)) return false;
  return true;
}

TEST(CountClosures, Chain7) {
  CountResult r = count_closures(make_chain(7));
  EXPECT_EQ(r.count, 64);
  EXPECT_EQ(r.trace.kind, TraceKind::SpecialCase);
  EXPECT_EQ(r.stats.subsets_checked, 0u);
}

TEST(CountClosures, StackedDiamondsMatchOracle) {
  Poset p = make_stacked(make_diamond(2), 2);
  ASSERT_EQ(p.size(), 8u);
  CountResult r = count_closures(p);
  EXPECT_EQ(r.count, naive_count(Relation::of(p)));
  EXPECT_EQ(r.count, 98);
  EXPECT_EQ(r.trace.kind, TraceKind::SummitSplit);
}

TEST(CountClosures, GluedChainBelowDiamond) {
  Poset p = GluedChainDiamond();
  Relation r = Relation::of(p);
  EXPECT_EQ(count_closures(p).count, naive_count(r));

  // With b1 required the summit is blocked and the lower chain splits off.
  CountResult blocked = count_closures(p, ElementSet(6, {3}));
  EXPECT_EQ(blocked.count, naive_count(r, mask_of(ElementSet(6, {3}))));
  EXPECT_EQ(blocked.trace.kind, TraceKind::BottleneckSplit);
  EXPECT_EQ(blocked.trace.suborder, ElementSet(6, {0, 1}));
  ASSERT_EQ(blocked.trace.children.size(), 3u);
  EXPECT_TRUE(blocked.trace.children[0].required.contains(0));
}

TEST(CountClosures, RequiredMaximalIsDropped) {
  Poset d = make_diamond(3);
  EXPECT_EQ(count_closures(d, ElementSet(5, {4})).count, count_closures(d).count);
  EXPECT_TRUE(count_closures(d, ElementSet(5, {4})).trace.required.empty());
}

TEST(CountClosures, Errors) {
  EXPECT_THROW(count_closures(Poset()), EmptyPoset);
  EXPECT_THROW(count_closures(make_chain(3), ElementSet(4)), std::invalid_argument);
  EXPECT_THROW(count_closures(make_powerset(4), {.brute_force_cap = 10}), TooLarge);
  EXPECT_EQ(count_closures(make_powerset(4), {.brute_force_cap = 10, .force = true}).count, 2480);
}

TEST(CountClosures, DisconnectedProduct) {
  Poset p = make_disjoint_union(make_chain(2), make_diamond(2));
  CountResult r = count_closures(p);
  EXPECT_EQ(r.count, 14);
  EXPECT_EQ(r.trace.kind, TraceKind::ComponentProduct);
  EXPECT_EQ(r.trace.children.size(), 2u);
}

TEST(Explain, Formats) {
  EXPECT_EQ(explain(count_closures(make_chain(5)).trace), "chain n=5 → 16\n");

  std::string summit = explain(count_closures(make_stacked(make_diamond(2), 2)).trace);
  EXPECT_NE(summit.find("summit split ["), std::string::npos);
  EXPECT_NE(summit.find("\n  quotient: "), std::string::npos);
  EXPECT_NE(summit.find("\n  suborder: "), std::string::npos);

  std::string brute = explain(count_closures(make_powerset(3)).trace);
  EXPECT_EQ(brute, "brute force |S|=8 subsets=128 → 61\n");

  std::string bottleneck = explain(count_closures(GluedChainDiamond(), ElementSet(6, {3})).trace);
  EXPECT_EQ(bottleneck.rfind("bottleneck split [0..1] |S'|=2 |S|=6 T={3}", 0), 0u) << bottleneck;
  EXPECT_NE(bottleneck.find("\n  quotient+[S']: "), std::string::npos);
}

class RandomCounts : public ::testing::Test {
 protected:
  std::mt19937_64 rng{99};
  ElementSet random_required(std::size_t n) {
    ElementSet t(n);
    const std::size_t k = rng() % (std::min<std::size_t>(3, n) + 1);
    while (t.size() < k) t.insert(static_cast<Element>(rng() % n));
    return t;
  }
};

TEST_F(RandomCounts, OracleEquivalence) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    Poset p = random_connected_poset(n, rng);
    ElementSet t = random_required(n);
    CountResult r = count_closures(p, t);
    ASSERT_EQ(r.count, naive_count(Relation::of(p), mask_of(t))) << write_edge_text(p) << to_string(t);
    EXPECT_TRUE(trace_consistent(r.trace));
    EXPECT_TRUE(sizes_shrink(r.trace));
    EXPECT_LE(depth(r.trace), 2 * n);
    EXPECT_EQ(trace_disjointness_violations(r.trace), 0u);
  }
}

TEST_F(RandomCounts, OracleEquivalenceDisconnected) {
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    Poset p = Poset::from_cover_edges(n, testing::random_dag_edges(n, 0.25, rng));
    ElementSet t = random_required(n);
    ASSERT_EQ(count_closures(p, t).count, naive_count(Relation::of(p), mask_of(t))) << write_edge_text(p);
  }
}

TEST_F(RandomCounts, LargerAgainstBruteForce) {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 10 + rng() % 7;
    Poset p = random_connected_poset(n, rng);
    ElementSet t = random_required(n);
    EXPECT_EQ(count_closures(p, t).count, count_closure_systems_bruteforce(p, t));
  }
}

// The bottleneck rule, split by whether a system meets the suborder: systems
// meeting it correspond to quotient systems containing the class times the
// nonempty preclosure systems of the suborder; systems avoiding it are the
// quotient systems avoiding the class.
TEST_F(RandomCounts, BottleneckIdentityByEnumeration) {
  int checked = 0;
  for (int trial = 0; trial < 600 && checked < 100; ++trial) {
    const std::size_t n = 3 + rng() % 7;
    Poset p = random_connected_poset(n, rng);
    auto isos = find_max_bottleneck_isos(p);
    if (isos.empty()) continue;
    const IsolatedSuborder& iso = isos[rng() % isos.size()];
    ElementSet t = random_required(n) - iso.members;
    ++checked;

    Relation r = Relation::of(p);
    const std::uint64_t s_mask = mask_of(iso.members), t_mask = mask_of(t);
    std::uint64_t meeting = 0, avoiding = 0;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c)
      if ((c & t_mask) == t_mask && testing::naive_is_closure_system(r, c)) ++((c & s_mask) ? meeting : avoiding);

    QuotientResult q = quotient(p, iso);
    Relation rq = Relation::of(q.quotient);
    std::uint64_t tq = 0;
    for (Element x : t) tq |= std::uint64_t{1} << q.class_of[x];
    const std::uint64_t cls = std::uint64_t{1} << q.collapsed;
    mpz_class with_class = naive_count(rq, tq | cls);
    mpz_class without_class = naive_count(rq, tq) - with_class;

    Restriction sub = p.restrict_to(iso.members);
    mpz_class preclosures = 2 * naive_count(Relation::of(sub.poset));
    EXPECT_EQ(mpz_class(meeting), with_class * (preclosures - 1)) << write_edge_text(p);
    EXPECT_EQ(mpz_class(avoiding), without_class) << write_edge_text(p);
  }
  EXPECT_GE(checked, 50);
}

TEST_F(RandomCounts, TraceUsesEveryRule) {
  CountStats total;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    CountStats s = count_closures(random_connected_poset(n, rng), random_required(n)).stats;
    total.summit_splits += s.summit_splits;
    total.bottleneck_splits += s.bottleneck_splits;
    total.formula_hits += s.formula_hits;
    total.brute_force_runs += s.brute_force_runs;
  }
  EXPECT_GT(total.summit_splits, 0u);
  EXPECT_GT(total.bottleneck_splits, 0u);
  EXPECT_GT(total.formula_hits, 0u);
  EXPECT_GT(total.brute_force_runs, 0u);
}

TEST(CountStats, DecompositionSavesWork) {
  for (std::size_t levels : {2, 3}) {
    Poset p = make_stacked(make_powerset(2), levels);
    BruteForceStats bf;
    BigCount direct = count_closure_systems_bruteforce(p, ElementSet(p.size()), {}, &bf);
    CountResult r = count_closures(p);
    EXPECT_EQ(r.count, direct);
    EXPECT_LT(r.stats.subsets_checked, bf.subsets_checked);
  }
}

}  // namespace
}  // namespace closcount
