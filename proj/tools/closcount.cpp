// closcount: count closure systems of finite posets via isolated suborders.
//
// Exit codes: 0 ok, 1 property/agreement failure, 2 input error, 3 size refusal.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "closcount/bench.hpp"
#include "closcount/counter.hpp"
#include "closcount/generators.hpp"
#include "closcount/poset_io.hpp"
#include "closcount/selfcheck.hpp"

namespace {

using namespace closcount;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;
constexpr int kTooLarge = 3;

struct InputArgs {
  std::string file;
  std::string family;
};

void add_input_options(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("file", in.file, "Poset file (edge text or JSON)");
  cmd->add_option("--gen", in.family, "Generated family, e.g. chain:7, diamond:2, stacked:2:powerset:2");
}

Poset load_input(const InputArgs& in) {
  if (in.file.empty() == in.family.empty())
    throw std::invalid_argument("give exactly one of a file or --gen");
  return in.family.empty() ? load_poset_file(in.file) : generate_family(in.family);
}

ElementSet parse_required(const std::string& text, std::size_t n) {
  ElementSet required(n);
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream is(cleaned);
  std::string token;
  while (is >> token) {
    std::size_t used = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || id >= n)
      throw std::invalid_argument("bad required element '" + token + "'");
    required.insert(static_cast<Element>(id));
  }
  return required;
}

std::string pretty(const std::string& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

std::string describe_shape(const Poset& p) {
  Shape s = detect_shape(p);
  if (s.kind == ShapeKind::Other) return "n=" + std::to_string(p.size());
  if (s.kind == ShapeKind::Chain) return to_string(s);
  return to_string(s) + " (n=" + std::to_string(p.size()) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count closure systems of finite posets using isolated suborders"};
  app.require_subcommand(1);

  InputArgs input;
  CountOptions options;

  auto* count_cmd = app.add_subcommand("count", "Print the exact number of closure systems");
  add_input_options(count_cmd, input);
  std::string required_text;
  bool trace = false, pretty_print = false;
  count_cmd->add_option("--required", required_text, "Element ids every counted system must contain");
  count_cmd->add_flag("--trace", trace, "Print the decomposition tree to stderr");
  count_cmd->add_flag("--force", options.force, "Allow brute force above the cap");
  count_cmd->add_flag("--pretty", pretty_print, "Group digits");
  count_cmd->add_option("--cap", options.brute_force_cap, "Brute-force size cap");
  count_cmd->add_option("--threads", options.threads, "Brute-force worker threads");

  auto* decompose_cmd = app.add_subcommand("decompose", "List maximal useful isolated suborders");
  add_input_options(decompose_cmd, input);
  bool as_json = false;
  decompose_cmd->add_flag("--json", as_json, "Structured output");

  auto* validate_cmd = app.add_subcommand("validate", "Check a poset file");
  add_input_options(validate_cmd, input);

  auto* generate_cmd = app.add_subcommand("generate", "Write a generated family as edge text");
  generate_cmd->add_option("--gen", input.family, "Family spec")->required();
  generate_cmd->add_flag("--json", as_json, "Structured output");

  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Compare decomposition with brute force on random posets");
  SelfCheckConfig selfcheck;
  selfcheck_cmd->add_option("--seed", selfcheck.seed, "RNG seed");
  selfcheck_cmd->add_option("--instances", selfcheck.instances, "Number of random posets");
  selfcheck_cmd->add_option("--max-size", selfcheck.max_size, "Largest poset size");
  selfcheck_cmd->add_option("--cap", selfcheck.count.brute_force_cap, "Brute-force size cap");

  auto* bench_cmd = app.add_subcommand("bench", "Brute force vs decomposition timings");
  std::vector<std::string> families, bench_files;
  std::string csv_path;
  bench_cmd->add_option("--family", families, "Generated family (repeatable)");
  bench_cmd->add_option("files", bench_files, "Poset files");
  bench_cmd->add_option("--csv", csv_path, "Also write the CSV report here");
  bench_cmd->add_flag("--force", options.force, "Allow brute force above the cap");
  bench_cmd->add_option("--threads", options.threads, "Brute-force worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*count_cmd) {
      Poset p = load_input(input);
      if (p.empty()) throw std::invalid_argument("cannot count on an empty poset");
      CountResult r = count_closures(p, parse_required(required_text, p.size()), options);
      std::cout << (pretty_print ? pretty(r.count.get_str()) : r.count.get_str()) << '\n';
      if (trace) std::cerr << explain(r.trace);
      return kOk;
    }

    if (*decompose_cmd) {
      Poset p = load_input(input);
      auto isos = find_max_summit_isos(p);
      auto bottleneck = find_max_bottleneck_isos(p);
      isos.insert(isos.end(), bottleneck.begin(), bottleneck.end());
      if (as_json) {
        auto list = nlohmann::json::array();
        for (const auto& iso : isos)
          list.push_back({{"bottom", iso.bottom},
                          {"top", iso.top},
                          {"size", iso.members.size()},
                          {"kind", to_string(iso.kind)},
                          {"members", iso.members.to_vector()}});
        std::cout << nlohmann::json{{"suborders", list}}.dump(2) << '\n';
      } else if (isos.empty()) {
        std::cout << "none\n";
      } else {
        for (const auto& iso : isos)
          std::cout << '(' << iso.bottom << ", " << iso.top << ", " << iso.members.size() << ", "
                    << to_string(iso.kind) << ")\n";
      }
      return kOk;
    }

    if (*validate_cmd) {
      Poset p = load_input(input);
      if (auto reduced = p.reduced_edge_count())
        std::cout << "reduced " << reduced << " transitive edge" << (reduced == 1 ? "" : "s") << '\n';
      auto components = p.connected_components().size();
      std::cout << "OK: " << describe_shape(p) << ", " << components << " component"
                << (components == 1 ? "" : "s") << '\n';
      return kOk;
    }

    if (*generate_cmd) {
      Poset p = generate_family(input.family);
      std::cout << (as_json ? write_structured(p) : write_edge_text(p));
      return kOk;
    }

    if (*selfcheck_cmd) {
      SelfCheckReport r = run_selfcheck(selfcheck);
      if (r.counterexample) std::cout << "counterexample:\n" << *r.counterexample;
      if (r.inconsistent_traces) std::cout << r.inconsistent_traces << " inconsistent traces\n";
      if (r.disjointness_violations)
        std::cout << r.disjointness_violations << " disjointness violations\n";
      std::cout << r.agreed << '/' << r.instances << (r.ok() ? " OK" : " FAILED") << '\n';
      return r.ok() ? kOk : kFailure;
    }

    if (*bench_cmd) {
      std::vector<BenchRow> rows;
      for (const auto& family : families) rows.push_back(bench_instance(family, generate_family(family), options));
      for (const auto& file : bench_files) rows.push_back(bench_instance(file, load_poset_file(file), options));
      write_csv(std::cout, rows);
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::invalid_argument("cannot write " + csv_path);
        write_csv(out, rows);
      }
      for (const auto& row : rows)
        if (!row.agree) return kFailure;
      return kOk;
    }
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << " (use --force)\n";
    return kTooLarge;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
