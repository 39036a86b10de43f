#pragma once

#include <vector>

#include "treelie/free_tree.hpp"

namespace treelie {

// Size caps for exhaustive enumeration; colored universes grow much faster.
struct EnumerationLimits {
  int one_color = 12;
  int multi_color = 8;

  int cap(int colors) const { return colors <= 1 ? one_color : multi_color; }
  static EnumerationLimits unbounded(int n) { return {n, n}; }
};

// All canonical rooted trees with exactly n vertices coloured from the
// palette, each exactly once, in Murua order.
std::vector<RootedTree> enumerate_rooted(int n, int colors,
                                         const EnumerationLimits& limits = {});
std::vector<RootedTree> enumerate_rooted(int n, const std::vector<Color>& palette,
                                         const EnumerationLimits& limits = {});
// Index k holds the size-k list (index 0 is empty).
std::vector<std::vector<RootedTree>> enumerate_rooted_upto(
    int n, int colors, const EnumerationLimits& limits = {});
std::vector<std::vector<RootedTree>> enumerate_rooted_upto(
    int n, const std::vector<Color>& palette, const EnumerationLimits& limits = {});

// All free trees with n vertices, identified by canonical representative and
// sorted by Murua order of representatives.
std::vector<FreeTree> enumerate_free(int n, int colors,
                                     const EnumerationLimits& limits = {});
std::vector<std::vector<FreeTree>> enumerate_free_upto(
    int n, int colors, const EnumerationLimits& limits = {});

}  // namespace treelie
