#include "treelie/rooted_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace treelie {

namespace {

// Number of vertices of the "view" consisting of the root of t plus its
// first k children. Views arise when peeling maximal branches off a tree
// without materializing the left parts.
int view_size(const RootedTree& t, int k) {
  int n = 1;
  for (int i = 0; i < k; ++i) n += t.children()[i].size();
  return n;
}

std::strong_ordering compare_view(const RootedTree& s, int ks,
                                  const RootedTree& t, int kt) {
  const int ns = view_size(s, ks);
  const int nt = view_size(t, kt);
  if (ns != nt) return ns <=> nt;
  if (ns == 1) return s.color() <=> t.color();
  // Equal sizes >= 2: both views have at least one child, and the last
  // child of a sorted prefix is its maximal branch.
  if (auto left = compare_view(s, ks - 1, t, kt - 1); left != 0) return left;
  return murua_compare(s.children()[ks - 1], t.children()[kt - 1]);
}

}  // namespace

std::strong_ordering murua_compare(const RootedTree& s, const RootedTree& t) {
  return compare_view(s, static_cast<int>(s.children().size()), t,
                      static_cast<int>(t.children().size()));
}

RootedTree::RootedTree(Color color, std::vector<RootedTree> children)
    : color_(color), children_(std::move(children)) {
  std::sort(children_.begin(), children_.end(),
            [](const RootedTree& a, const RootedTree& b) {
              return murua_compare(a, b) < 0;
            });
  for (const RootedTree& c : children_) size_ += c.size_;
}

RootedTree RootedTree::left_part() const {
  if (leaf()) throw std::logic_error("left_part: single vertex has no decomposition");
  std::vector<RootedTree> rest(children_.begin(), children_.end() - 1);
  return RootedTree(color_, std::move(rest));
}

bool RootedTree::operator==(const RootedTree& other) const {
  return size_ == other.size_ && color_ == other.color_ &&
         children_ == other.children_;
}

std::strong_ordering RootedTree::operator<=>(const RootedTree& other) const {
  return murua_compare(*this, other);
}

RootedTree butcher(const RootedTree& s, const RootedTree& t) {
  std::vector<RootedTree> children = s.children();
  children.push_back(t);
  return RootedTree(s.color(), std::move(children));
}

namespace {

RootedTree graft_into(const RootedTree& s, const RootedTree& t, int v) {
  if (v == 0) return butcher(t, s);
  std::vector<RootedTree> children = t.children();
  int offset = 1;
  for (RootedTree& c : children) {
    if (v < offset + c.size()) {
      c = graft_into(s, c, v - offset);
      return RootedTree(t.color(), std::move(children));
    }
    offset += c.size();
  }
  throw std::logic_error("graft_into: unreachable");
}

}  // namespace

RootedTree graft_at(const RootedTree& s, const RootedTree& t, int v) {
  if (v < 0 || v >= t.size())
    throw std::invalid_argument("graft_at: vertex index out of range");
  return graft_into(s, t, v);
}

Integer symmetry_factor(const RootedTree& t) {
  Integer sym = 1;
  const auto& children = t.children();
  std::size_t i = 0;
  while (i < children.size()) {
    std::size_t j = i;
    while (j < children.size() && children[j] == children[i]) ++j;
    const auto multiplicity = static_cast<int>(j - i);
    Integer branch_sym = symmetry_factor(children[i]);
    Integer power = 1;
    for (int k = 0; k < multiplicity; ++k) power *= branch_sym;
    sym *= factorial(multiplicity) * power;
    i = j;
  }
  return sym;
}

}  // namespace treelie
