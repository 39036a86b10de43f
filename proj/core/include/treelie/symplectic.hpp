#pragma once

#include "treelie/vector_field.hpp"

namespace treelie {

// Standard symplectic structure on R^{2r}: ω(x,y) = Σ_i x_i y_{r+i} − x_{r+i} y_i.
class SymplecticStructure {
 public:
  explicit SymplecticStructure(int half_dimension);
  static SymplecticStructure for_dimension(int n);  // throws on odd n

  int half_dimension() const { return r_; }
  int dimension() const { return 2 * r_; }

  Rational form(std::span<const Rational> x, std::span<const Rational> y) const;

 private:
  int r_;
};

// {f,g} = Σ_{i<=r} ∂f/∂t_i ∂g/∂t_{i+r} − ∂g/∂t_i ∂f/∂t_{i+r}.
Polynomial poisson(const Polynomial& f, const Polynomial& g);

// The field a = {H,−}: a_i = −∂H/∂t_{i+r} for i <= r, a_i = ∂H/∂t_{i−r} above.
PolyVectorField hamiltonian_vf(const Polynomial& hamiltonian);

// Exact test: a is hamiltonian iff Ω·Da is a symmetric polynomial matrix,
// where Da is the Jacobian and Ω the matrix of the standard form.
bool is_hamiltonian(const PolyVectorField& a);

// The unique H with hamiltonian_vf(H) = a and H(0) = 0, by termwise
// integration of the closed 1-form Ω·a along straight lines from the origin.
Polynomial extract_hamiltonian(const PolyVectorField& a);

}  // namespace treelie
