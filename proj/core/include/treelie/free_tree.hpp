#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "treelie/rooted_tree.hpp"
#include "treelie/sign.hpp"

namespace treelie {

// Non-rooted tree, stored through its canonical representative: the
// Murua-maximal rooting. Vertices are numbered by preorder traversal of the
// representative, so the canonical root is vertex 0 and the edge set is
// {v, parent(v)} for v >= 1. Immutable after construction.
class FreeTree {
 public:
  // Forgets the root of any rooting (the projection π).
  explicit FreeTree(const RootedTree& rooting);

  // Explicit vertex/edge construction; rejects lists that are not a tree
  // (disconnected, cyclic, self-loops, duplicate edges).
  static FreeTree from_edges(std::vector<Color> colors,
                             const std::vector<std::pair<int, int>>& edges);

  const RootedTree& representative() const { return representative_; }
  int size() const { return static_cast<int>(colors_.size()); }
  int canonical_root() const { return 0; }
  Color color(int v) const;
  int parent(int v) const;  // -1 at the canonical root
  int depth(int v) const;
  // Edges as (parent(v), v) pairs for v = 1..size()-1.
  std::vector<std::pair<int, int>> edges() const;

  // The unique rooted tree obtained by putting the root at v.
  RootedTree root_at(int v) const;
  // root_at plus the map from this tree's vertices to preorder indices of
  // the result.
  std::pair<RootedTree, std::vector<int>> rooting_with_map(int v) const;

  // Edge-split test: the tree is superfluous iff removing some edge leaves
  // two equal rooted components; rooting at either end then gives s∘s.
  bool superfluous() const { return split_.has_value(); }
  struct Split {
    RootedTree half;  // the witness s
    int end_a = 0;    // the two ends of the splitting edge
    int end_b = 0;
  };
  const std::optional<Split>& split() const { return split_; }

  // (−1)^{distance to the canonical root}, or zero on superfluous trees;
  // invariant under automorphisms.
  Sign epsilon(int v) const;

  bool operator==(const FreeTree& other) const {
    return representative_ == other.representative_;
  }
  std::strong_ordering operator<=>(const FreeTree& other) const {
    return representative_ <=> other.representative_;
  }

 private:
  FreeTree() = default;
  friend struct FreeTreeBuilder;

  RootedTree representative_;
  std::vector<Color> colors_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::optional<Split> split_;
};

inline FreeTree project(const RootedTree& t) { return FreeTree(t); }

// The canonical representative of π(t) together with a vertex of t (preorder
// index in t) where the Murua maximum is attained.
std::pair<RootedTree, int> canonical_rooting(const RootedTree& t);

// Disjoint union of sigma and tau plus a new edge between vertex v of sigma
// and vertex w of tau. The tracked variant reports where each input vertex
// landed in the result's canonical numbering.
struct LinkedTree {
  FreeTree tree;
  std::vector<int> first;   // image of each vertex of sigma
  std::vector<int> second;  // image of each vertex of tau
};
LinkedTree link_tracked(const FreeTree& sigma, int v, const FreeTree& tau, int w);
FreeTree link(const FreeTree& sigma, int v, const FreeTree& tau, int w);

// N(t, τ): number of vertices whose rooting equals t.
int rooting_count(const RootedTree& t, const FreeTree& tau);

}  // namespace treelie
