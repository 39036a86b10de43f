#pragma once

#include <string>
#include <vector>

#include "treelie/enumerate.hpp"
#include "treelie/polynomial.hpp"

namespace treelie {

struct VerifyOptions {
  int jobs = 1;
  EnumerationLimits limits{};
};

// Tally of an exhaustive check. Detail lines are deterministic and identical
// for any worker count.
struct VerifyOutcome {
  long cases = 0;
  long failures = 0;
  std::vector<std::string> details;

  bool passed() const { return failures == 0; }
};

// X̃(σ⋄τ) = [X̃(σ), X̃(τ)] over all ordered free-tree pairs, |σ|+|τ| <= n.
VerifyOutcome verify_theorem4(int n, int colors, const VerifyOptions& options = {});

// σ⋄τ + τ⋄σ = 0 over unordered pairs, |σ|+|τ| <= n.
VerifyOutcome verify_diamond_antisymmetry(int n, int colors,
                                          const VerifyOptions& options = {});

// Cyclic Jacobi sum vanishes over unordered triples, |σ|+|τ|+|υ| <= n.
VerifyOutcome verify_diamond_jacobi(int n, int colors,
                                    const VerifyOptions& options = {});

// N(t,τ)·sym(t) = sym(τ_*) per rooting of non-superfluous trees, plus
// Σ_t N(t,τ) = |τ| for every free tree with <= n vertices.
VerifyOutcome verify_prop2(int n, int colors, const VerifyOptions& options = {});

// Edge-split superfluous test vs the maximiser-multiplicity oracle, witness
// τ_v = s∘s, and adjacency of the two maximisers, for every |τ| <= n.
VerifyOutcome verify_lemma1(int n, int colors, const VerifyOptions& options = {});

// {H(σ), H(τ)} − H(σ⋄τ) must be a constant polynomial for |σ|+|τ| <= n;
// the constants are reported as detail lines.
VerifyOutcome verify_prop5(int n, const Polynomial& hamiltonian,
                           const VerifyOptions& options = {});

}  // namespace treelie
