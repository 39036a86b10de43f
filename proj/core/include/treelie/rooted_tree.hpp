#pragma once

#include <compare>
#include <vector>

#include "treelie/color.hpp"
#include "treelie/rational.hpp"

namespace treelie {

// Non-planar rooted tree with coloured vertices, kept in canonical form:
// children are sorted non-decreasing in Murua order, so the maximal branch
// is always the last child and the canonical decomposition t = t_L ∘ t_R is
// O(1). Values are immutable after construction; equality is structural.
//
// Vertices are indexed by preorder traversal in stored child order (the root
// is 0); every operation that takes a vertex uses that numbering.
class RootedTree {
 public:
  RootedTree() = default;  // single colour-0 vertex
  explicit RootedTree(Color color) : color_(color) {}
  RootedTree(Color color, std::vector<RootedTree> children);

  Color color() const { return color_; }
  const std::vector<RootedTree>& children() const { return children_; }
  int size() const { return size_; }
  bool leaf() const { return children_.empty(); }

  // t_R of the canonical decomposition; size() >= 2 required.
  const RootedTree& max_branch() const { return children_.back(); }
  // t_L of the canonical decomposition; size() >= 2 required.
  RootedTree left_part() const;

  bool operator==(const RootedTree& other) const;
  // Murua order; EQ coincides with structural equality on canonical forms.
  std::strong_ordering operator<=>(const RootedTree& other) const;

 private:
  Color color_{};
  std::vector<RootedTree> children_;
  int size_ = 1;
};

// Murua's recursive total order: by size, then t_L, then t_R; colours enter
// at the single-vertex base case.
std::strong_ordering murua_compare(const RootedTree& s, const RootedTree& t);

// Right Butcher product s∘t: t grafted as an extra branch on the root of s.
RootedTree butcher(const RootedTree& s, const RootedTree& t);

// s attached by a new edge below vertex v of t.
RootedTree graft_at(const RootedTree& s, const RootedTree& t, int v);

// |Aut t|: the product of m! · sym(branch)^m over repeated branches.
Integer symmetry_factor(const RootedTree& t);

}  // namespace treelie
