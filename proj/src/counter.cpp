#include "closcount/counter.hpp"

#include <algorithm>
#include <sstream>

namespace closcount {

namespace {

class Counter {
 public:
  Counter(std::size_t root_size, const CountOptions& options)
      : root_size_(root_size), options_(options) {}

  // `origin[x]` is the set of root ids that element x of `p` stands for.
  TraceNode count(const Poset& p, const ElementSet& required, const std::vector<ElementSet>& origin) {
    if (p.empty()) throw EmptyPoset();
    const ElementSet t = required - p.maximal_elements();

    TraceNode node;
    node.poset_size = p.size();
    node.required = flatten(t, origin);

    auto components = p.connected_components();
    if (components.size() > 1) {
      node.kind = TraceKind::ComponentProduct;
      node.value = 1;
      ++stats.component_splits;
      for (const ElementSet& component : components) {
        Restriction r = p.restrict_to(component);
        node.children.push_back(count(r.poset, pull_back(t, r), pull_back(origin, r)));
        node.value *= node.children.back().value;
      }
      return node;
    }

    if (auto special = count_special_shape(p, t)) {
      node.kind = TraceKind::SpecialCase;
      node.shape = special->shape;
      node.value = special->value;
      ++stats.formula_hits;
      return node;
    }

    if (auto iso = choose(find_max_summit_isos(p), t)) {
      describe(node, p, *iso, origin);
      node.kind = TraceKind::SummitSplit;
      ++stats.summit_splits;
      QuotientResult q = quotient(p, *iso);
      Restriction sub = p.restrict_to(iso->members);
      check_smaller(p, q.quotient, sub.poset);
      auto q_origin = push_forward(origin, q);
      node.children.push_back(count(q.quotient, image(t, q), q_origin));
      node.children.push_back(count(sub.poset, ElementSet(sub.poset.size()), pull_back(origin, sub)));
      node.value = node.children[0].value * node.children[1].value;
      return node;
    }

    if (auto iso = choose(find_max_bottleneck_isos(p), t)) {
      describe(node, p, *iso, origin);
      node.kind = TraceKind::BottleneckSplit;
      ++stats.bottleneck_splits;
      QuotientResult q = quotient(p, *iso);
      Restriction sub = p.restrict_to(iso->members);
      check_smaller(p, q.quotient, sub.poset);
      auto q_origin = push_forward(origin, q);
      ElementSet tq = image(t, q);
      ElementSet tq_with_class = tq;
      tq_with_class.insert(q.collapsed);
      node.children.push_back(count(q.quotient, tq_with_class, q_origin));
      node.children.push_back(count(sub.poset, ElementSet(sub.poset.size()), pull_back(origin, sub)));
      node.children.push_back(count(q.quotient, tq, q_origin));
      node.value = node.children[0].value * 2 * (node.children[1].value - 1) + node.children[2].value;
      return node;
    }

    node.kind = TraceKind::BruteForce;
    BruteForceStats bf;
    node.value = count_closure_systems_bruteforce(
        p, t, {options_.brute_force_cap, options_.force, options_.threads}, &bf);
    node.subsets_checked = bf.subsets_checked;
    stats.subsets_checked += bf.subsets_checked;
    stats.brute_force_runs += bf.runs;
    return node;
  }

  CountStats stats;

 private:
  // Largest suborder disjoint from t; ties go to the smallest bottom id.
  static std::optional<IsolatedSuborder> choose(std::vector<IsolatedSuborder> isos,
                                                const ElementSet& t) {
    std::optional<IsolatedSuborder> best;
    for (auto& iso : isos) {
      if (iso.members.intersects(t)) continue;
      if (!best || iso.members.size() > best->members.size() ||
          (iso.members.size() == best->members.size() && iso.bottom < best->bottom))
        best = std::move(iso);
    }
    return best;
  }

  static void check_smaller(const Poset& p, const Poset& q, const Poset& sub) {
    if (q.size() >= p.size() || sub.size() >= p.size())
      throw std::logic_error("decomposition did not shrink the poset");
  }

  void describe(TraceNode& node, const Poset& p, const IsolatedSuborder& iso,
                const std::vector<ElementSet>& origin) const {
    node.bottom_label = p.label(iso.bottom);
    node.top_label = p.label(iso.top);
    node.suborder = flatten(iso.members, origin);
    if (node.suborder.intersects(node.required))
      throw std::logic_error("chosen suborder meets the required set");
  }

  ElementSet flatten(const ElementSet& local, const std::vector<ElementSet>& origin) const {
    ElementSet r(root_size_);
    for (Element x : local) r |= origin[x];
    return r;
  }

  static ElementSet pull_back(const ElementSet& s, const Restriction& r) {
    ElementSet local(r.poset.size());
    for (Element i = 0; i < r.to_original.size(); ++i)
      if (s.contains(r.to_original[i])) local.insert(i);
    return local;
  }

  static std::vector<ElementSet> pull_back(const std::vector<ElementSet>& origin, const Restriction& r) {
    std::vector<ElementSet> out;
    out.reserve(r.to_original.size());
    for (Element x : r.to_original) out.push_back(origin[x]);
    return out;
  }

  static ElementSet image(const ElementSet& s, const QuotientResult& q) {
    ElementSet r(q.quotient.size());
    for (Element x : s) r.insert(q.class_of[x]);
    return r;
  }

  std::vector<ElementSet> push_forward(const std::vector<ElementSet>& origin,
                                       const QuotientResult& q) const {
    std::vector<ElementSet> out(q.quotient.size(), ElementSet(root_size_));
    for (Element x = 0; x < origin.size(); ++x) out[q.class_of[x]] |= origin[x];
    return out;
  }

  std::size_t root_size_;
  CountOptions options_;
};

}  // namespace

CountResult count_closures(const Poset& p, const ElementSet& required, const CountOptions& options) {
  if (p.empty()) throw EmptyPoset();
  if (required.universe() != p.size()) throw std::invalid_argument("required set has the wrong universe");
  std::vector<ElementSet> origin;
  origin.reserve(p.size());
  for (Element x = 0; x < p.size(); ++x) origin.push_back(ElementSet(p.size(), {x}));

  Counter counter(p.size(), options);
  CountResult result;
  result.trace = counter.count(p, required, origin);
  result.count = result.trace.value;
  result.stats = counter.stats;
  return result;
}

BigCount count_preclosure_systems(const Poset& p, const CountOptions& options) {
  if (!p.greatest()) throw NoGreatestElement();
  return 2 * count_closures(p, options).count;
}

namespace {

void explain_into(std::ostringstream& os, const TraceNode& node, const std::string& role,
                  std::size_t depth) {
  os << std::string(depth * 2, ' ') << role;
  auto with_t = [&] {
    if (!node.required.empty()) os << " T=" << to_string(node.required);
  };
  switch (node.kind) {
    case TraceKind::SpecialCase:
      os << to_string(node.shape);
      with_t();
      break;
    case TraceKind::ComponentProduct:
      os << "components x" << node.children.size() << " |S|=" << node.poset_size;
      with_t();
      break;
    case TraceKind::SummitSplit:
    case TraceKind::BottleneckSplit:
      os << (node.kind == TraceKind::SummitSplit ? "summit split [" : "bottleneck split [")
         << node.bottom_label << ".." << node.top_label << "] |S'|=" << node.suborder.size()
         << " |S|=" << node.poset_size;
      with_t();
      break;
    case TraceKind::BruteForce:
      os << "brute force |S|=" << node.poset_size << " subsets=" << node.subsets_checked;
      with_t();
      break;
  }
  os << " → " << node.value.get_str() << '\n';

  static const char* const summit_roles[] = {"quotient: ", "suborder: "};
  static const char* const bottleneck_roles[] = {"quotient+[S']: ", "suborder: ", "quotient: "};
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    std::string child_role;
    if (node.kind == TraceKind::SummitSplit) child_role = summit_roles[i];
    if (node.kind == TraceKind::BottleneckSplit) child_role = bottleneck_roles[i];
    explain_into(os, node.children[i], child_role, depth + 1);
  }
}

std::size_t violations(const TraceNode& node, const std::vector<ElementSet>& used) {
  std::size_t count = 0;
  switch (node.kind) {
    case TraceKind::ComponentProduct:
      for (const auto& c : node.children) count += violations(c, used);
      break;
    case TraceKind::SummitSplit:
      count += node.suborder.intersects(node.required);
      count += violations(node.children[0], used);
      count += violations(node.children[1], {});
      break;
    case TraceKind::BottleneckSplit: {
      count += node.suborder.intersects(node.required);
      for (const auto& u : used) count += node.suborder.intersects(u);
      auto extended = used;
      extended.push_back(node.suborder);
      count += violations(node.children[0], extended);
      count += violations(node.children[1], {});
      count += violations(node.children[2], extended);
      break;
    }
    case TraceKind::SpecialCase:
    case TraceKind::BruteForce:
      break;
  }
  return count;
}

}  // namespace

std::string explain(const TraceNode& trace) {
  std::ostringstream os;
  explain_into(os, trace, "", 0);
  return os.str();
}

bool trace_consistent(const TraceNode& node) {
  for (const auto& c : node.children)
    if (!trace_consistent(c)) return false;
  const auto& ch = node.children;
  switch (node.kind) {
    case TraceKind::ComponentProduct: {
      BigCount product = 1;
      for (const auto& c : ch) product *= c.value;
      return ch.size() >= 2 && product == node.value;
    }
    case TraceKind::SummitSplit:
      return ch.size() == 2 && ch[0].value * ch[1].value == node.value;
    case TraceKind::BottleneckSplit:
      return ch.size() == 3 && ch[0].value * 2 * (ch[1].value - 1) + ch[2].value == node.value;
    case TraceKind::SpecialCase:
    case TraceKind::BruteForce:
      return ch.empty();
  }
  return false;
}

std::size_t trace_disjointness_violations(const TraceNode& trace) { return violations(trace, {}); }

}  // namespace closcount
