#include "treelie/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace treelie {

namespace {

void check_args(int n, std::size_t palette_size, const EnumerationLimits& limits) {
  if (n < 1) throw std::invalid_argument("enumerate: n must be positive");
  if (palette_size < 1) throw std::invalid_argument("enumerate: empty colour palette");
  const int cap = limits.cap(static_cast<int>(palette_size));
  if (n > cap)
    throw std::runtime_error("enumeration cap exceeded: n=" + std::to_string(n) +
                             " > cap=" + std::to_string(cap));
}

// Extends a non-decreasing branch sequence until the size budget is spent,
// then emits one tree per root colour. Enumerating branch multisets as
// non-decreasing sequences over the Murua-sorted universe produces every
// canonical tree exactly once.
void emit_trees(const std::vector<RootedTree>& universe, std::size_t from,
                int remaining, std::vector<RootedTree>& branches,
                const std::vector<Color>& palette, std::vector<RootedTree>& out) {
  if (remaining == 0) {
    for (Color c : palette) out.emplace_back(c, branches);
    return;
  }
  for (std::size_t i = from; i < universe.size(); ++i) {
    if (universe[i].size() > remaining) break;  // universe is size-sorted
    branches.push_back(universe[i]);
    emit_trees(universe, i, remaining - universe[i].size(), branches, palette, out);
    branches.pop_back();
  }
}

}  // namespace

std::vector<std::vector<RootedTree>> enumerate_rooted_upto(
    int n, const std::vector<Color>& palette, const EnumerationLimits& limits) {
  check_args(n, palette.size(), limits);
  std::vector<Color> sorted_palette = palette;
  std::sort(sorted_palette.begin(), sorted_palette.end());
  sorted_palette.erase(std::unique(sorted_palette.begin(), sorted_palette.end()),
                       sorted_palette.end());

  std::vector<std::vector<RootedTree>> by_size(n + 1);
  std::vector<RootedTree> universe;  // all trees of size < current, Murua order
  for (Color c : sorted_palette) by_size[1].emplace_back(c);
  for (int m = 2; m <= n; ++m) {
    universe.insert(universe.end(), by_size[m - 1].begin(), by_size[m - 1].end());
    std::vector<RootedTree> branches;
    emit_trees(universe, 0, m - 1, branches, sorted_palette, by_size[m]);
    std::sort(by_size[m].begin(), by_size[m].end());
  }
  return by_size;
}

std::vector<std::vector<RootedTree>> enumerate_rooted_upto(
    int n, int colors, const EnumerationLimits& limits) {
  if (colors < 1) throw std::invalid_argument("enumerate: colors must be positive");
  std::vector<Color> palette;
  for (int i = 0; i < colors; ++i) palette.push_back(Color{i});
  return enumerate_rooted_upto(n, palette, limits);
}

std::vector<RootedTree> enumerate_rooted(int n, int colors,
                                         const EnumerationLimits& limits) {
  return enumerate_rooted_upto(n, colors, limits).back();
}

std::vector<RootedTree> enumerate_rooted(int n, const std::vector<Color>& palette,
                                         const EnumerationLimits& limits) {
  return enumerate_rooted_upto(n, palette, limits).back();
}

std::vector<std::vector<FreeTree>> enumerate_free_upto(
    int n, int colors, const EnumerationLimits& limits) {
  auto rooted = enumerate_rooted_upto(n, colors, limits);
  std::vector<std::vector<FreeTree>> by_size(n + 1);
  for (int m = 1; m <= n; ++m) {
    for (const RootedTree& t : rooted[m]) {
      FreeTree tau(t);
      // Keep exactly the trees that are their own canonical representative.
      if (tau.representative() == t) by_size[m].push_back(std::move(tau));
    }
  }
  return by_size;
}

std::vector<FreeTree> enumerate_free(int n, int colors,
                                     const EnumerationLimits& limits) {
  return enumerate_free_upto(n, colors, limits).back();
}

}  // namespace treelie
