#include "closcount/bench.hpp"

#include <chrono>

namespace closcount {

namespace {

template <typename F>
double seconds(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

BenchRow bench_instance(std::string name, const Poset& p, const CountOptions& options) {
  BenchRow row;
  row.name = std::move(name);
  row.size = p.size();

  BigCount direct;
  BruteForceStats bf;
  row.brute_force_seconds = seconds([&] {
    direct = count_closure_systems_bruteforce(
        p, ElementSet(p.size()), {options.brute_force_cap, options.force, options.threads}, &bf);
  });
  row.brute_force_subsets = bf.subsets_checked;

  CountResult decomposed;
  row.decomposition_seconds = seconds([&] { decomposed = count_closures(p, options); });
  row.decomposition_subsets = decomposed.stats.subsets_checked;
  row.count = decomposed.count;
  row.agree = direct == decomposed.count;
  return row;
}

void write_csv(std::ostream& os, std::span<const BenchRow> rows) {
  os << "instance,size,brute_force_seconds,decomposition_seconds,count,agree,"
        "brute_force_subsets,decomposition_subsets\n";
  for (const BenchRow& r : rows)
    os << r.name << ',' << r.size << ',' << r.brute_force_seconds << ',' << r.decomposition_seconds
       << ',' << r.count.get_str() << ',' << (r.agree ? "true" : "false") << ','
       << r.brute_force_subsets << ',' << r.decomposition_subsets << '\n';
}

}  // namespace closcount
