#pragma once

#include <string_view>
#include <vector>

#include "treelie/coefficient_map.hpp"

namespace treelie {

// Runge-Kutta tableau (A, b) with exact rational entries.
class ButcherTableau {
 public:
  ButcherTableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

  static ButcherTableau midpoint();       // A=[1/2], b=[1]
  static ButcherTableau forward_euler();  // A=[0],   b=[1]

  // Text form: stage count, then the s rows of A, then b; '#' comments.
  static ButcherTableau parse(std::string_view text);

  int stages() const { return static_cast<int>(b_.size()); }
  const Rational& a(int i, int j) const { return a_.at(i).at(j); }
  const Rational& b(int i) const { return b_.at(i); }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
};

// Elementary weight Φ(t) by the stagewise recursion
// d(•) = 1, d(B_+(t_1..t_k))_i = Π_j (A·d(t_j))_i, Φ(t) = b·d(t).
// One-colour trees only.
Rational rk_elementary_weights(const ButcherTableau& tableau, const RootedTree& t);

// Weight map for every one-colour tree with <= n vertices, with α(𝟙) = 1;
// ready-made input for the canonical-condition checker.
CoefficientMap rk_coefficient_map(const ButcherTableau& tableau, int n,
                                  const EnumerationLimits& limits = {});

}  // namespace treelie
