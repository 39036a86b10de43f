#pragma once

#include "treelie/polynomial.hpp"

namespace treelie {

// Polynomial vector field on R^n: one component polynomial per coordinate,
// all over the same n variables.
class PolyVectorField {
 public:
  explicit PolyVectorField(int dimension);  // the zero field
  explicit PolyVectorField(std::vector<Polynomial> components);

  int dimension() const { return static_cast<int>(components_.size()); }
  const Polynomial& component(int i) const { return components_.at(i); }
  const std::vector<Polynomial>& components() const { return components_; }
  bool zero() const;

  PolyVectorField& operator+=(const PolyVectorField& o);
  PolyVectorField& operator-=(const PolyVectorField& o);
  PolyVectorField& operator*=(const Rational& s);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) {
    return a += b;
  }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) {
    return a -= b;
  }
  friend PolyVectorField operator*(const Rational& s, PolyVectorField a) {
    return a *= s;
  }

  std::vector<Rational> operator()(std::span<const Rational> point) const;

  bool operator==(const PolyVectorField& other) const = default;

 private:
  std::vector<Polynomial> components_;
};

// (f▷g)_j = Σ_i f_i ∂_i g_j; this product is left pre-Lie.
PolyVectorField vf_prelie(const PolyVectorField& f, const PolyVectorField& g);

// [f, g] = f▷g − g▷f.
PolyVectorField vf_bracket(const PolyVectorField& f, const PolyVectorField& g);

}  // namespace treelie
