#include "treelie/symplectic.hpp"

#include <numeric>
#include <stdexcept>

namespace treelie {

SymplecticStructure::SymplecticStructure(int half_dimension) : r_(half_dimension) {
  if (r_ < 1) throw std::invalid_argument("half dimension must be positive");
}

SymplecticStructure SymplecticStructure::for_dimension(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("symplectic structure needs an even dimension");
  return SymplecticStructure(n / 2);
}

Rational SymplecticStructure::form(std::span<const Rational> x,
                                   std::span<const Rational> y) const {
  if (static_cast<int>(x.size()) != dimension() ||
      static_cast<int>(y.size()) != dimension())
    throw std::invalid_argument("form: dimension mismatch");
  Rational total = 0;
  for (int i = 0; i < r_; ++i) total += x[i] * y[r_ + i] - x[r_ + i] * y[i];
  return total;
}

namespace {
int half_of(int nvars) {
  if (nvars < 2 || nvars % 2 != 0)
    throw std::invalid_argument("even variable count required");
  return nvars / 2;
}
}  // namespace

Polynomial poisson(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars())
    throw std::invalid_argument("poisson: variable count mismatch");
  const int r = half_of(f.nvars());
  Polynomial out(f.nvars());
  for (int i = 0; i < r; ++i) {
    out += f.derivative(i) * g.derivative(i + r);
    out -= g.derivative(i) * f.derivative(i + r);
  }
  return out;
}

PolyVectorField hamiltonian_vf(const Polynomial& hamiltonian) {
  const int r = half_of(hamiltonian.nvars());
  std::vector<Polynomial> components;
  components.reserve(2 * r);
  for (int i = 0; i < r; ++i) {
    Polynomial p = hamiltonian.derivative(i + r);
    p *= Rational(-1);
    components.push_back(std::move(p));
  }
  for (int i = 0; i < r; ++i) components.push_back(hamiltonian.derivative(i));
  return PolyVectorField(std::move(components));
}

namespace {

// Row j of Ω·a for the standard form: a_{j+r} below, −a_{j−r} above.
Polynomial omega_row(const PolyVectorField& a, int j, int r) {
  if (j < r) return a.component(j + r);
  Polynomial p = a.component(j - r);
  p *= Rational(-1);
  return p;
}

}  // namespace

bool is_hamiltonian(const PolyVectorField& a) {
  const int n = a.dimension();
  const int r = half_of(n);
  // Ω·Da symmetric: row j of Ω·Da is the gradient of (Ω·a)_j.
  std::vector<Polynomial> theta;
  theta.reserve(n);
  for (int j = 0; j < n; ++j) theta.push_back(omega_row(a, j, r));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (theta[i].derivative(j) != theta[j].derivative(i)) return false;
  return true;
}

Polynomial extract_hamiltonian(const PolyVectorField& a) {
  if (!is_hamiltonian(a))
    throw std::domain_error("extract_hamiltonian: field is not hamiltonian");
  const int n = a.dimension();
  const int r = half_of(n);
  // Straight-line homotopy: H(x) = ∫₀¹ Σ_j (Ω·a)_j(tx)·x_j dt integrates each
  // monomial c·x^α of (Ω·a)_j to c/(|α|+1)·x^α·x_j.
  Polynomial h(n);
  for (int j = 0; j < n; ++j) {
    const Polynomial theta = omega_row(a, j, r);
    for (const auto& [m, c] : theta.terms()) {
      const int degree = std::accumulate(m.begin(), m.end(), 0);
      Monomial bumped = m;
      ++bumped[j];
      h.add_term(bumped, c / Rational(degree + 1));
    }
  }
  return h;
}

}  // namespace treelie
