#pragma once

#include "treelie/combination.hpp"
#include "treelie/free_tree.hpp"

namespace treelie {

using RootedCombination = Combination<RootedTree>;
using FreeCombination = Combination<FreeTree>;

// Pre-Lie product by grafting: s→t sums s→_v t over all vertices of t;
// extended bilinearly.
RootedCombination prelie(const RootedTree& s, const RootedTree& t);
RootedCombination prelie(const RootedCombination& x, const RootedCombination& y);

// [x, y] = x→y − y→x.
RootedCombination lie_bracket(const RootedCombination& x, const RootedCombination& y);

// Signed sum of all rootings of a free tree; vanishes on superfluous trees.
RootedCombination xtilde(const FreeTree& tau);
RootedCombination xtilde(const FreeCombination& x);

// Signed sum over all single-edge linkings; lands in the span of
// non-superfluous trees and is a Lie bracket there.
FreeCombination diamond(const FreeTree& sigma, const FreeTree& tau);
FreeCombination diamond(const FreeCombination& x, const FreeCombination& y);

// Projection onto the non-superfluous span: drops superfluous terms.
FreeCombination quotient_superfluous(const FreeCombination& x);

}  // namespace treelie
