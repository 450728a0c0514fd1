#include "closcount/selfcheck.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "closcount/generators.hpp"
#include "closcount/poset_io.hpp"

namespace closcount {

SelfCheckReport run_selfcheck(const SelfCheckConfig& config) {
  if (config.max_size > config.count.brute_force_cap)
    throw std::invalid_argument("--max-size exceeds the brute-force cap");
  if (config.max_size == 0) throw std::invalid_argument("--max-size must be positive");

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> size_dist(1, config.max_size);
  SelfCheckReport report;
  for (std::size_t i = 0; i < config.instances; ++i) {
    const std::size_t n = size_dist(rng);
    Poset p = random_connected_poset(n, rng);

    std::vector<Element> ids(n);
    std::iota(ids.begin(), ids.end(), Element{0});
    std::shuffle(ids.begin(), ids.end(), rng);
    std::uniform_int_distribution<std::size_t> t_size(0, std::min(config.max_required, n));
    ids.resize(t_size(rng));
    ElementSet required = ElementSet::from_range(n, ids);

    CountResult decomposed = count_closures(p, required, config.count);
    BigCount oracle = count_closure_systems_bruteforce(p, required);
    ++report.instances;
    if (decomposed.count == oracle) {
      ++report.agreed;
    } else if (!report.counterexample) {
      std::ostringstream os;
      os << "instance " << i << ": T=" << to_string(required) << " decomposition="
         << decomposed.count.get_str() << " brute force=" << oracle.get_str() << '\n'
         << write_edge_text(p) << explain(decomposed.trace);
      report.counterexample = os.str();
    }
    if (!trace_consistent(decomposed.trace)) ++report.inconsistent_traces;
    report.disjointness_violations += trace_disjointness_violations(decomposed.trace);
  }
  return report;
}

}  // namespace closcount
