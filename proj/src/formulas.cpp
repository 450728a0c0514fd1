#include "closcount/formulas.hpp"

namespace closcount {

namespace {

BigCount pow2(std::size_t e) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace

BigCount count_chain(std::size_t length, std::size_t constrained_below_top) {
  if (length == 0) throw std::invalid_argument("chain length must be positive");
  if (constrained_below_top > length - 1) throw std::invalid_argument("constraint exceeds chain");
  return pow2(length - 1 - constrained_below_top);
}

BigCount count_diamond(std::size_t width, const ConstraintSummary& t) {
  if (width == 0 || t.belt_hits > width) throw std::invalid_argument("bad diamond constraint");
  if (t.contains_bottom || t.belt_hits > 1) return pow2(width - t.belt_hits);
  if (t.belt_hits == 1) return pow2(width - 1) + 1;
  return pow2(width) + static_cast<unsigned long>(width) + 1;
}

BigCount count_bottomless_diamond(std::size_t width, const ConstraintSummary& t) {
  if (width == 0 || t.belt_hits > width) throw std::invalid_argument("bad diamond constraint");
  return pow2(width - t.belt_hits);
}

std::optional<ConstrainedCount> count_special_shape(const Poset& p, const ElementSet& required) {
  Shape shape = detect_shape(p);
  if (shape.kind == ShapeKind::Other) return std::nullopt;

  ConstraintSummary t;
  const Element top = *p.greatest();
  const auto bottom = p.least();
  t.contains_top = required.contains(top);
  t.contains_bottom = bottom && required.contains(*bottom);
  t.belt_hits = required.size() - (t.contains_top ? 1 : 0);

  ConstrainedCount r{0, shape, t};
  switch (shape.kind) {
    case ShapeKind::Chain:
      r.value = count_chain(shape.param, t.belt_hits);
      break;
    case ShapeKind::Diamond:
      if (t.contains_bottom) --r.summary.belt_hits;
      r.value = count_diamond(shape.param, r.summary);
      break;
    case ShapeKind::BottomlessDiamond:
      r.value = count_bottomless_diamond(shape.param, t);
      break;
    case ShapeKind::Other:
      break;
  }
  return r;
}

BigCount count_disconnected(const Poset& p, const ElementSet& required,
                            const ComponentCounter& component_counter) {
  BigCount product = 1;
  for (const ElementSet& component : p.connected_components()) {
    Restriction r = p.restrict_to(component);
    ElementSet local(r.poset.size());
    for (Element i = 0; i < r.to_original.size(); ++i)
      if (required.contains(r.to_original[i])) local.insert(i);
    product *= component_counter(r.poset, local);
  }
  return product;
}

}  // namespace closcount
