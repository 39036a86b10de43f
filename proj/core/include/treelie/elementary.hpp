#pragma once

#include "treelie/coefficient_map.hpp"
#include "treelie/tree_algebra.hpp"
#include "treelie/vector_field.hpp"

namespace treelie {

// One vector field per colour, all of one dimension.
class ColorAssignment {
 public:
  ColorAssignment() = default;
  ColorAssignment(std::initializer_list<std::pair<Color, PolyVectorField>> fields);

  void assign(Color d, PolyVectorField field);
  bool has(Color d) const { return fields_.count(d) > 0; }
  const PolyVectorField& field(Color d) const;  // throws on a missing colour
  int dimension() const { return dimension_; }
  std::vector<Color> palette() const;
  const std::map<Color, PolyVectorField>& fields() const { return fields_; }

 private:
  std::map<Color, PolyVectorField> fields_;
  int dimension_ = 0;
};

// The unique pre-Lie morphism sending each one-vertex tree to its assigned
// field: F(B_+^c(t_1..t_k))_j sums F(t_1)_{i_1}···F(t_k)_{i_k}
// ∂_{i_1}···∂_{i_k}(a_c)_j over all index tuples.
PolyVectorField elementary_differential(const RootedTree& t, const ColorAssignment& a);
PolyVectorField elementary_differential(const RootedCombination& x,
                                        const ColorAssignment& a);

// Truncated B-series at y0: entry k is the exact coefficient of h^k, i.e.
// α(∅)·y0 at k=0 and Σ_{|t|=k} α(t)/sym(t)·F(t)(y0) for k >= 1. Throws on an
// undefined coefficient.
std::vector<std::vector<Rational>> bseries_truncated(
    const CoefficientMap& alpha, const ColorAssignment& a,
    const std::vector<Rational>& y0, int order,
    const EnumerationLimits& limits = {});

// The function whose hamiltonian field is F(X̃(τ)), normalized to vanish at
// the origin; zero for superfluous trees. Requires hamiltonian inputs.
Polynomial elementary_hamiltonian(const FreeTree& tau, const ColorAssignment& a);
Polynomial elementary_hamiltonian(const FreeCombination& x, const ColorAssignment& a);

}  // namespace treelie
