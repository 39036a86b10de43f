#include "treelie/vector_field.hpp"

#include <stdexcept>

namespace treelie {

PolyVectorField::PolyVectorField(int dimension) {
  if (dimension < 1) throw std::invalid_argument("vector field dimension must be positive");
  components_.assign(dimension, Polynomial(dimension));
}

PolyVectorField::PolyVectorField(std::vector<Polynomial> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("vector field needs at least one component");
  for (const Polynomial& p : components_)
    if (p.nvars() != dimension())
      throw std::invalid_argument("component count must equal variable count");
}

bool PolyVectorField::zero() const {
  for (const Polynomial& p : components_)
    if (!p.zero()) return false;
  return true;
}

namespace {
void check_same(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("vector field dimension mismatch");
}
}  // namespace

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  check_same(*this, o);
  for (int i = 0; i < dimension(); ++i) components_[i] += o.components_[i];
  return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
  check_same(*this, o);
  for (int i = 0; i < dimension(); ++i) components_[i] -= o.components_[i];
  return *this;
}

PolyVectorField& PolyVectorField::operator*=(const Rational& s) {
  for (Polynomial& p : components_) p *= s;
  return *this;
}

std::vector<Rational> PolyVectorField::operator()(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(components_.size());
  for (const Polynomial& p : components_) out.push_back(p(point));
  return out;
}

PolyVectorField vf_prelie(const PolyVectorField& f, const PolyVectorField& g) {
  check_same(f, g);
  const int n = f.dimension();
  std::vector<Polynomial> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) {
    Polynomial sum(n);
    for (int i = 0; i < n; ++i) sum += f.component(i) * g.component(j).derivative(i);
    out.push_back(std::move(sum));
  }
  return PolyVectorField(std::move(out));
}

PolyVectorField vf_bracket(const PolyVectorField& f, const PolyVectorField& g) {
  PolyVectorField out = vf_prelie(f, g);
  out -= vf_prelie(g, f);
  return out;
}

}  // namespace treelie
