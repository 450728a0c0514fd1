#include <random>
#include <set>

#include "gtest/gtest.h"

#include "closcount/closure.hpp"
#include "closcount/counter.hpp"
#include "closcount/generators.hpp"
#include "closcount/poset_io.hpp"
#include "oracle.hpp"

namespace closcount {
namespace {

using testing::mask_of;
using testing::naive_count;
using testing::Relation;

TEST(IsClosureSystem, Examples) {
  EXPECT_TRUE(is_closure_system(make_chain(3), ElementSet(3, {2})));
  EXPECT_FALSE(is_closure_system(make_chain(3), ElementSet(3, {0})));
  EXPECT_TRUE(is_closure_system(make_antichain(2), ElementSet(2, {0, 1})));
  Poset d = make_diamond(2);
  EXPECT_FALSE(is_closure_system(d, ElementSet(4, {1, 2, 3})));  // bottom sees b1 and b2
  EXPECT_TRUE(is_closure_system(d, ElementSet(4, {1, 3})));
  EXPECT_FALSE(is_closure_system(d, ElementSet(4)));
}

TEST(LeastMajorizer, Examples) {
  Poset d = make_diamond(2);
  EXPECT_EQ(least_majorizer(d, 0, ElementSet(4, {1, 3})), Element{1});
  EXPECT_EQ(least_majorizer(d, 2, ElementSet(4, {1, 3})), Element{3});
  EXPECT_FALSE(least_majorizer(d, 0, ElementSet(4, {1, 2})));
  EXPECT_FALSE(least_majorizer(d, 3, ElementSet(4, {1, 2})));
}

TEST(OperatorFromSystem, Diamond) {
  Poset d = make_diamond(2);
  EXPECT_EQ(operator_from_system(d, ElementSet(4, {1, 3})).image, (std::vector<Element>{1, 1, 3, 3}));
  EXPECT_THROW(operator_from_system(d, ElementSet(4, {1, 2, 3})), std::invalid_argument);
}

TEST(SystemFromOperator, Examples) {
  Poset chain = make_chain(3);
  EXPECT_EQ(system_from_operator(chain, {{2, 2, 2}}), ElementSet(3, {2}));
  EXPECT_EQ(system_from_operator(chain, {{0, 1, 2}}), chain.all());
  EXPECT_THROW(system_from_operator(chain, {{1, 0, 2}}), InvalidOperator);  // not extensive
  EXPECT_THROW(system_from_operator(chain, {{1, 2, 2}}), InvalidOperator);  // not idempotent
}

TEST(IsClosureOperator, IsotoneFailure) {
  // Extensive and idempotent, but 0 <= 1 while c(0) = 2 is not below c(1) = 1.
  Poset d = make_diamond(2);
  EXPECT_FALSE(is_closure_operator(d, {{2, 1, 2, 3}}));
  EXPECT_TRUE(is_closure_operator(d, {{1, 1, 3, 3}}));
  EXPECT_FALSE(is_closure_operator(d, {{0, 1, 2}}));
}

TEST(Preclosure, Examples) {
  Poset chain = make_chain(3);
  EXPECT_TRUE(is_preclosure_system(chain, ElementSet(3, {0})));
  EXPECT_FALSE(is_closure_system(chain, ElementSet(3, {0})));
  EXPECT_THROW(is_preclosure_system(make_antichain(2), ElementSet(2)), NoGreatestElement);
  EXPECT_EQ(count_preclosure_systems(make_chain(2)), 4);
  EXPECT_EQ(count_preclosure_systems(make_diamond(2)), 14);
  EXPECT_THROW(count_preclosure_systems(make_antichain(2)), NoGreatestElement);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(count_closure_systems_bruteforce(make_chain(2), ElementSet(2)), 2);
  EXPECT_EQ(count_closure_systems_bruteforce(make_antichain(3), ElementSet(3)), 1);
  EXPECT_EQ(count_closure_systems_bruteforce(make_diamond(2), ElementSet(4)), 7);
  EXPECT_EQ(count_closure_systems_bruteforce(make_powerset(3), ElementSet(8)), 61);
  EXPECT_EQ(count_closure_systems_bruteforce(make_chain(4), ElementSet(4, {0})), 4);
}

TEST(BruteForce, ChainFormula) {
  for (std::size_t n = 1; n <= 10; ++n)
    EXPECT_EQ(count_closure_systems_bruteforce(make_chain(n), ElementSet(n)),
              BigCount(1) << static_cast<mp_bitcnt_t>(n - 1));
}

TEST(BruteForce, CapAndForce) {
  Poset big = make_powerset(4);
  EXPECT_THROW(count_closure_systems_bruteforce(big, ElementSet(16), {.cap = 10}), TooLarge);
  EXPECT_EQ(count_closure_systems_bruteforce(big, ElementSet(16), {.cap = 10, .force = true}), 2480);
}

TEST(BruteForce, StatsCountCandidates) {
  BruteForceStats stats;
  count_closure_systems_bruteforce(make_chain(5), ElementSet(5), {}, &stats);
  EXPECT_EQ(stats.subsets_checked, 16u);  // the top is forced
  EXPECT_EQ(stats.runs, 1u);
}

TEST(Enumerate, OrderAndValidity) {
  Poset d = make_diamond(2);
  auto systems = enumerate_closure_systems(d, ElementSet(4));
  ASSERT_EQ(systems.size(), 7u);
  std::set<std::uint64_t> seen;
  for (const auto& c : systems) {
    EXPECT_TRUE(is_closure_system(d, c));
    EXPECT_TRUE(c.contains(3));
    EXPECT_TRUE(seen.insert(mask_of(c)).second);
  }
  EXPECT_EQ(systems.front(), ElementSet(4, {3}));
  EXPECT_EQ(enumerate_closure_systems(make_chain(2), ElementSet(2)),
            (std::vector<ElementSet>{ElementSet(2, {1}), ElementSet(2, {0, 1})}));
}

TEST(Enumerate, DiamondWithRequiredBeltElement) {
  auto systems = enumerate_closure_systems(make_diamond(2), ElementSet(4, {1}));
  EXPECT_EQ(systems, (std::vector<ElementSet>{ElementSet(4, {1, 3}), ElementSet(4, {0, 1, 3}),
                                              ElementSet(4, {0, 1, 2, 3})}));
}

class RandomClosures : public ::testing::Test {
 protected:
  std::mt19937_64 rng{77};

  Poset random(std::size_t max_n) {
    const std::size_t n = 1 + rng() % max_n;
    return Poset::from_cover_edges(n, testing::random_dag_edges(n, 0.35, rng));
  }
  ElementSet random_subset(std::size_t n, std::size_t max_size) {
    ElementSet s(n);
    const std::size_t k = rng() % (std::min(max_size, n) + 1);
    while (s.size() < k) s.insert(static_cast<Element>(rng() % n));
    return s;
  }
};

TEST_F(RandomClosures, BruteForceMatchesNaive) {
  for (int trial = 0; trial < 300; ++trial) {
    Poset p = random(10);
    ElementSet t = random_subset(p.size(), 3);
    ASSERT_EQ(count_closure_systems_bruteforce(p, t), naive_count(Relation::of(p), mask_of(t)))
        << write_edge_text(p);
  }
}

TEST_F(RandomClosures, ThreadCountIsInvisible) {
  for (int trial = 0; trial < 30; ++trial) {
    Poset p = random(14);
    BigCount one = count_closure_systems_bruteforce(p, ElementSet(p.size()), {.threads = 1});
    EXPECT_EQ(count_closure_systems_bruteforce(p, ElementSet(p.size()), {.threads = 4}), one);
  }
}

TEST_F(RandomClosures, EnumerationValid) {
  for (int trial = 0; trial < 50; ++trial) {
    Poset p = random(8);
    ElementSet t = random_subset(p.size(), 2);
    auto systems = enumerate_closure_systems(p, t);
    EXPECT_EQ(BigCount(systems.size()), naive_count(Relation::of(p), mask_of(t)));
    for (const auto& c : systems) {
      EXPECT_TRUE(is_closure_system(p, c));
      EXPECT_TRUE(t.is_subset_of(c));
    }
  }
}

TEST_F(RandomClosures, SystemOperatorRoundTrip) {
  for (int trial = 0; trial < 50; ++trial) {
    Poset p = random(7);
    for (const auto& c : enumerate_closure_systems(p, ElementSet(p.size()))) {
      ClosureOperator f = operator_from_system(p, c);
      ASSERT_TRUE(is_closure_operator(p, f));
      EXPECT_EQ(system_from_operator(p, f), c);
      // Extensivity: every element is below its image, which is in c.
      for (Element x = 0; x < p.size(); ++x) {
        EXPECT_TRUE(p.leq(x, f.image[x]));
        EXPECT_TRUE(c.contains(f.image[x]));
      }
    }
  }
}

TEST_F(RandomClosures, OperatorsBijectWithSystems) {
  for (int trial = 0; trial < 40; ++trial) {
    Poset p = random(5);
    const std::size_t n = p.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= n;
    std::size_t operators = 0;
    ClosureOperator f{std::vector<Element>(n)};
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (std::size_t i = 0; i < n; ++i, rest /= n) f.image[i] = static_cast<Element>(rest % n);
      if (!is_closure_operator(p, f)) continue;
      ++operators;
      ElementSet c = system_from_operator(p, f);
      ASSERT_TRUE(is_closure_system(p, c));
      EXPECT_EQ(operator_from_system(p, c), f);
    }
    EXPECT_EQ(BigCount(operators), count_closure_systems_bruteforce(p, ElementSet(n)));
  }
}

TEST_F(RandomClosures, PreclosureDoubling) {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    Poset p = testing::random_poset_with_top(n, rng);
    Element top = *p.greatest();
    std::uint64_t pre = 0, closed = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      ElementSet c(n);
      for (Element x = 0; x < n; ++x)
        if (m >> x & 1) c.insert(x);
      if (is_preclosure_system(p, c)) ++pre;
      if (is_closure_system(p, c)) ++closed;
      if (is_preclosure_system(p, c)) {
        ElementSet other = c;
        c.contains(top) ? other.erase(top) : other.insert(top);
        EXPECT_TRUE(is_preclosure_system(p, other));
      }
    }
    EXPECT_EQ(pre, 2 * closed);
    EXPECT_EQ(count_preclosure_systems(p), BigCount(pre));
  }
}

TEST_F(RandomClosures, DisconnectedIsProduct) {
  for (int trial = 0; trial < 40; ++trial) {
    Poset a = random(5), b = random(5);
    Poset u = make_disjoint_union(a, b);
    EXPECT_EQ(count_closure_systems_bruteforce(u, ElementSet(u.size())),
              count_closure_systems_bruteforce(a, ElementSet(a.size())) *
                  count_closure_systems_bruteforce(b, ElementSet(b.size())));
  }
}

}  // namespace
}  // namespace closcount
