#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "treelie/coefficient_map.hpp"

namespace treelie {

struct Violation {
  RootedTree s;
  RootedTree t;
  Rational lhs;
  Rational rhs;
};

// Result of a coefficient-level audit. Violations are listed in
// (|s|+|t|, s, t) order; printing emits one VIOLATION line per entry and a
// PASS/FAIL summary with pair counts.
struct CheckReport {
  std::string name;
  long cases = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

std::ostream& operator<<(std::ostream& out, const CheckReport& report);

// α(s∘t) + α(t∘s) = 0 for every pair with |s|+|t| <= n; requires α(𝟙) = 0.
CheckReport check_hamiltonian_condition(const CoefficientMap& alpha, int n,
                                        const EnumerationLimits& limits = {});

// α(s∘t) + α(t∘s) = α(s)·α(t) for every pair with |s|+|t| <= n.
CheckReport check_canonical_condition(const CoefficientMap& alpha, int n,
                                      const EnumerationLimits& limits = {});

// α(τ_v) = ε(v,τ)·α(τ_*) for every rooting of every free tree with <= n
// vertices; rootings of superfluous trees must carry coefficient zero.
CheckReport check_sign_consistency(const CoefficientMap& alpha, int n,
                                   const EnumerationLimits& limits = {});

// Stores α(τ_*) per non-superfluous free tree; requires a sign-consistent
// input with α(𝟙) = 0.
FreeCoefficientMap compress(const CoefficientMap& alpha, int n,
                            const EnumerationLimits& limits = {});

// Reconstructs α(τ_v) = ε(v,τ)·α(τ_*) on every rooted tree with <= n
// vertices (zero on superfluous ones); inverse of compress on its domain.
CoefficientMap expand(const FreeCoefficientMap& phi, int n,
                      const EnumerationLimits& limits = {});

}  // namespace treelie
