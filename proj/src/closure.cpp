#include "closcount/closure.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace closcount {

std::optional<Element> least_majorizer(const Poset& p, Element x, const ElementSet& c) {
  ElementSet majorizers = p.up_set(x, c);
  // The least element, if any, is a member m with majorizers ⊆ ↑m.
  for (Element m : majorizers)
    if ((majorizers - p.above(m)).size() == 1) return m;
  return std::nullopt;
}

bool is_closure_system(const Poset& p, const ElementSet& c) {
  for (Element x = 0; x < p.size(); ++x)
    if (!c.contains(x) && !least_majorizer(p, x, c)) return false;
  return true;
}

bool is_closure_operator(const Poset& p, const ClosureOperator& f) {
  const std::size_t n = p.size();
  if (f.image.size() != n) return false;
  for (Element x = 0; x < n; ++x) {
    Element fx = f.image[x];
    if (fx >= n || !p.leq(x, fx) || f.image[fx] != fx) return false;
    for (Element y : p.above(x))
      if (!p.leq(fx, f.image[y])) return false;
  }
  return true;
}

ClosureOperator operator_from_system(const Poset& p, const ElementSet& c) {
  ClosureOperator f;
  f.image.resize(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    auto m = least_majorizer(p, x, c);
    if (!m) throw std::invalid_argument("not a closure system: no least majorizer of " + p.label(x));
    f.image[x] = *m;
  }
  return f;
}

ElementSet system_from_operator(const Poset& p, const ClosureOperator& f) {
  if (!is_closure_operator(p, f)) throw InvalidOperator("map is not extensive, isotone and idempotent");
  ElementSet fix(p.size());
  for (Element x = 0; x < p.size(); ++x)
    if (f.image[x] == x) fix.insert(x);
  return fix;
}

bool is_preclosure_system(const Poset& p, const ElementSet& c) {
  auto top = p.greatest();
  if (!top) throw NoGreatestElement();
  ElementSet with_top = c;
  with_top.insert(*top);
  return is_closure_system(p, with_top);
}

namespace {

// Closure-system test on 64-bit masks, with elements relabelled by a linear
// extension so that the least majorizer candidate is the lowest set bit.
class SubsetChecker {
 public:
  SubsetChecker(const Poset& p, const ElementSet& required, const BruteForceOptions& options) {
    const std::size_t n = p.size();
    if (n > options.cap && !options.force) throw TooLarge(n, options.cap);
    if (n > 64) throw TooLarge(n, 64);

    position_.resize(n);
    const auto& topo = p.topological_order();
    for (std::size_t i = 0; i < n; ++i) position_[topo[i]] = static_cast<unsigned>(i);
    up_.assign(n, 0);
    for (Element x = 0; x < n; ++x) {
      std::uint64_t m = bit(x);
      for (Element y : p.above(x)) m |= bit(y);
      up_[position_[x]] = m;
    }
    universe_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    ElementSet forced = required | p.maximal_elements();
    for (Element x : forced) forced_ |= bit(x);
    for (Element x = 0; x < n; ++x)
      if (!forced.contains(x)) free_.push_back(x);
    if (free_.size() > 62) throw TooLarge(n, options.cap);
  }

  std::uint64_t bit(Element x) const { return std::uint64_t{1} << position_[x]; }

  bool accepts(std::uint64_t members) const {
    std::uint64_t outside = universe_ & ~members;
    while (outside) {
      unsigned i = static_cast<unsigned>(std::countr_zero(outside));
      outside &= outside - 1;
      std::uint64_t majorizers = up_[i] & members;
      if (!majorizers) return false;
      unsigned least = static_cast<unsigned>(std::countr_zero(majorizers));
      if (majorizers & ~up_[least]) return false;
    }
    return true;
  }

  std::uint64_t forced() const { return forced_; }
  const std::vector<Element>& free_elements() const { return free_; }

 private:
  std::vector<unsigned> position_;
  std::vector<std::uint64_t> up_;
  std::uint64_t universe_ = 0;
  std::uint64_t forced_ = 0;
  std::vector<Element> free_;
};

// Counts accepted subsets forced ∪ outer ∪ s for every s ⊆ inner.
std::uint64_t count_block(const SubsetChecker& checker, std::uint64_t base, std::uint64_t inner) {
  std::uint64_t accepted = 0;
  std::uint64_t sub = 0;
  do {
    if (checker.accepts(base | sub)) ++accepted;
    sub = (sub - inner) & inner;
  } while (sub != 0);
  return accepted;
}

}  // namespace

void for_each_closure_system(const Poset& p, const ElementSet& required,
                             const std::function<void(const ElementSet&)>& visit,
                             const BruteForceOptions& options) {
  SubsetChecker checker(p, required, options);
  const auto& free = checker.free_elements();
  ElementSet forced = required | p.maximal_elements();
  const std::uint64_t total = std::uint64_t{1} << free.size();
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t mask = checker.forced();
    for (std::size_t i = 0; i < free.size(); ++i)
      if (k >> i & 1) mask |= checker.bit(free[i]);
    if (!checker.accepts(mask)) continue;
    ElementSet members = forced;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (k >> i & 1) members.insert(free[i]);
    visit(members);
  }
}

std::vector<ElementSet> enumerate_closure_systems(const Poset& p, const ElementSet& required,
                                                  const BruteForceOptions& options) {
  std::vector<ElementSet> out;
  for_each_closure_system(p, required, [&](const ElementSet& c) { out.push_back(c); }, options);
  return out;
}

BigCount count_closure_systems_bruteforce(const Poset& p, const ElementSet& required,
                                          const BruteForceOptions& options,
                                          BruteForceStats* stats) {
  SubsetChecker checker(p, required, options);
  std::vector<std::uint64_t> free_bits;
  for (Element x : checker.free_elements()) free_bits.push_back(checker.bit(x));
  std::sort(free_bits.begin(), free_bits.end());

  // The highest `outer` free bits are fixed per task; the rest is enumerated.
  std::size_t outer = 0;
  const unsigned threads = std::max(1u, options.threads);
  if (threads > 1 && free_bits.size() >= 16)
    while ((std::size_t{1} << outer) < std::size_t{threads} * 8 && outer < free_bits.size()) ++outer;
  std::uint64_t inner = 0;
  for (std::size_t i = 0; i + outer < free_bits.size(); ++i) inner |= free_bits[i];
  const std::size_t tasks = std::size_t{1} << outer;

  auto outer_mask = [&](std::size_t task) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < outer; ++j)
      if (task >> j & 1) m |= free_bits[free_bits.size() - outer + j];
    return m;
  };

  std::vector<std::uint64_t> accepted(tasks, 0);
  if (tasks == 1) {
    accepted[0] = count_block(checker, checker.forced(), inner);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t t = next++; t < tasks; t = next++)
        accepted[t] = count_block(checker, checker.forced() | outer_mask(t), inner);
    };
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < std::min<std::size_t>(threads, tasks); ++i) pool.emplace_back(worker);
  }

  BigCount total = 0;
  for (std::uint64_t a : accepted) total += static_cast<unsigned long>(a);
  if (stats) {
    stats->subsets_checked += std::uint64_t{1} << free_bits.size();
    ++stats->runs;
  }
  return total;
}

}  // namespace closcount
