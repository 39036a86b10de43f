#include "treelie/tree_algebra.hpp"

namespace treelie {

RootedCombination prelie(const RootedTree& s, const RootedTree& t) {
  RootedCombination out;
  for (int v = 0; v < t.size(); ++v) out.add(graft_at(s, t, v), Rational(1));
  return out;
}

RootedCombination prelie(const RootedCombination& x, const RootedCombination& y) {
  RootedCombination out;
  for (const auto& [s, cs] : x.terms())
    for (const auto& [t, ct] : y.terms())
      out.add_scaled(prelie(s, t), cs * ct);
  return out;
}

RootedCombination lie_bracket(const RootedCombination& x, const RootedCombination& y) {
  RootedCombination out = prelie(x, y);
  out -= prelie(y, x);
  return out;
}

RootedCombination xtilde(const FreeTree& tau) {
  RootedCombination out;
  for (int v = 0; v < tau.size(); ++v) {
    const Sign e = tau.epsilon(v);
    if (e != Sign::zero) out.add(tau.root_at(v), Rational(to_int(e)));
  }
  return out;
}

RootedCombination xtilde(const FreeCombination& x) {
  RootedCombination out;
  for (const auto& [tau, c] : x.terms()) out.add_scaled(xtilde(tau), c);
  return out;
}

FreeCombination diamond(const FreeTree& sigma, const FreeTree& tau) {
  FreeCombination out;
  for (int v = 0; v < sigma.size(); ++v) {
    const Sign ev = sigma.epsilon(v);
    for (int w = 0; w < tau.size(); ++w) {
      const Sign ew = tau.epsilon(w);
      // The linked tree is canonicalized once; all ε factors read off it.
      // Superfluous linked trees are not pre-filtered: their ε vanishes.
      LinkedTree linked = link_tracked(sigma, v, tau, w);
      const Sign delta = linked.tree.epsilon(linked.second[w]) * ev * ew;
      if (delta != Sign::zero) out.add(linked.tree, Rational(to_int(delta)));
    }
  }
  return out;
}

FreeCombination diamond(const FreeCombination& x, const FreeCombination& y) {
  FreeCombination out;
  for (const auto& [sigma, cs] : x.terms())
    for (const auto& [tau, ct] : y.terms())
      out.add_scaled(diamond(sigma, tau), cs * ct);
  return out;
}

FreeCombination quotient_superfluous(const FreeCombination& x) {
  FreeCombination out;
  for (const auto& [tau, c] : x.terms())
    if (!tau.superfluous()) out.add(tau, c);
  return out;
}

}  // namespace treelie
