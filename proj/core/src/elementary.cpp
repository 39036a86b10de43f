#include "treelie/elementary.hpp"

#include <stdexcept>

#include "treelie/symplectic.hpp"

namespace treelie {

ColorAssignment::ColorAssignment(
    std::initializer_list<std::pair<Color, PolyVectorField>> fields) {
  for (const auto& [color, field] : fields) assign(color, field);
}

void ColorAssignment::assign(Color d, PolyVectorField field) {
  if (dimension_ == 0)
    dimension_ = field.dimension();
  else if (field.dimension() != dimension_)
    throw std::invalid_argument("colour assignment: dimension mismatch");
  fields_.insert_or_assign(d, std::move(field));
}

const PolyVectorField& ColorAssignment::field(Color d) const {
  auto it = fields_.find(d);
  if (it == fields_.end())
    throw std::out_of_range("no vector field assigned to colour c" +
                            std::to_string(d.index));
  return it->second;
}

std::vector<Color> ColorAssignment::palette() const {
  std::vector<Color> out;
  out.reserve(fields_.size());
  for (const auto& [color, field] : fields_) out.push_back(color);
  return out;
}

namespace {

// Sums F(t_1)_{i_1}···F(t_k)_{i_k} ∂_{i_1}···∂_{i_k} base over all ordered
// index tuples; the full sum, with no symmetrization shortcut.
Polynomial branch_sum(const std::vector<PolyVectorField>& branch_fields,
                      std::size_t next, const Polynomial& base) {
  if (next == branch_fields.size()) return base;
  const int n = base.nvars();
  Polynomial total(n);
  for (int i = 0; i < n; ++i) {
    const Polynomial partial = base.derivative(i);
    if (partial.zero()) continue;
    total += branch_fields[next].component(i) * branch_sum(branch_fields, next + 1, partial);
  }
  return total;
}

}  // namespace

PolyVectorField elementary_differential(const RootedTree& t, const ColorAssignment& a) {
  const PolyVectorField& root_field = a.field(t.color());
  if (t.leaf()) return root_field;
  std::vector<PolyVectorField> branch_fields;
  branch_fields.reserve(t.children().size());
  for (const RootedTree& c : t.children())
    branch_fields.push_back(elementary_differential(c, a));
  const int n = a.dimension();
  std::vector<Polynomial> components;
  components.reserve(n);
  for (int j = 0; j < n; ++j)
    components.push_back(branch_sum(branch_fields, 0, root_field.component(j)));
  return PolyVectorField(std::move(components));
}

PolyVectorField elementary_differential(const RootedCombination& x,
                                        const ColorAssignment& a) {
  PolyVectorField out(a.dimension());
  for (const auto& [t, c] : x.terms()) {
    PolyVectorField term = elementary_differential(t, a);
    term *= c;
    out += term;
  }
  return out;
}

std::vector<std::vector<Rational>> bseries_truncated(
    const CoefficientMap& alpha, const ColorAssignment& a,
    const std::vector<Rational>& y0, int order, const EnumerationLimits& limits) {
  if (static_cast<int>(y0.size()) != a.dimension())
    throw std::invalid_argument("bseries: initial point dimension mismatch");
  if (order < 0) throw std::invalid_argument("bseries: negative order");

  std::vector<std::vector<Rational>> series;
  series.reserve(order + 1);
  std::vector<Rational> head;
  head.reserve(y0.size());
  for (const Rational& y : y0) head.push_back(alpha.empty_coefficient() * y);
  series.push_back(std::move(head));

  if (order == 0) return series;
  auto by_size = enumerate_rooted_upto(order, a.palette(), limits);
  for (int k = 1; k <= order; ++k) {
    std::vector<Rational> acc(y0.size(), Rational(0));
    for (const RootedTree& t : by_size[k]) {
      const Rational weight = alpha.at(t) / Rational(symmetry_factor(t));
      if (weight == 0) continue;
      std::vector<Rational> value = elementary_differential(t, a)(y0);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += weight * value[i];
    }
    series.push_back(std::move(acc));
  }
  return series;
}

namespace {

void require_hamiltonian_inputs(const ColorAssignment& a) {
  for (const auto& [color, field] : a.fields())
    if (!is_hamiltonian(field))
      throw std::domain_error("field assigned to colour c" +
                              std::to_string(color.index) + " is not hamiltonian");
}

}  // namespace

Polynomial elementary_hamiltonian(const FreeTree& tau, const ColorAssignment& a) {
  require_hamiltonian_inputs(a);
  return extract_hamiltonian(elementary_differential(xtilde(tau), a));
}

Polynomial elementary_hamiltonian(const FreeCombination& x, const ColorAssignment& a) {
  require_hamiltonian_inputs(a);
  return extract_hamiltonian(elementary_differential(xtilde(x), a));
}

}  // namespace treelie
