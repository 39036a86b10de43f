#include "treelie/free_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace treelie {

namespace {

// Scratch adjacency form used while re-rooting and canonicalizing.
struct Graph {
  std::vector<Color> colors;
  std::vector<std::vector<int>> adj;

  int size() const { return static_cast<int>(colors.size()); }
};

struct Rooting {
  RootedTree tree;
  std::vector<int> order;  // order[k] = original vertex at preorder index k
};

Rooting root_graph_at(const Graph& g, int root, int parent = -1) {
  struct Child {
    RootedTree tree;
    std::vector<int> ids;
  };
  std::vector<Child> subs;
  for (int w : g.adj[root]) {
    if (w == parent) continue;
    Rooting sub = root_graph_at(g, w, root);
    subs.push_back({std::move(sub.tree), std::move(sub.order)});
  }
  std::stable_sort(subs.begin(), subs.end(), [](const Child& a, const Child& b) {
    return murua_compare(a.tree, b.tree) < 0;
  });
  std::vector<RootedTree> children;
  std::vector<int> order{root};
  children.reserve(subs.size());
  for (Child& c : subs) {
    children.push_back(std::move(c.tree));
    order.insert(order.end(), c.ids.begin(), c.ids.end());
  }
  return {RootedTree(g.colors[root], std::move(children)), std::move(order)};
}

Graph graph_of(const RootedTree& t) {
  Graph g;
  g.colors.resize(t.size());
  g.adj.resize(t.size());
  // Preorder walk assigning indices and parent edges.
  int next = 0;
  auto walk = [&](auto&& self, const RootedTree& node, int parent) -> void {
    const int id = next++;
    g.colors[id] = node.color();
    if (parent >= 0) {
      g.adj[parent].push_back(id);
      g.adj[id].push_back(parent);
    }
    for (const RootedTree& c : node.children()) self(self, c, id);
  };
  walk(walk, t, -1);
  return g;
}

// Murua-maximal rooting over all vertices; ties resolved to the first
// maximiser (they root identical trees).
std::pair<Rooting, int> maximal_rooting(const Graph& g) {
  Rooting best = root_graph_at(g, 0);
  int best_vertex = 0;
  for (int v = 1; v < g.size(); ++v) {
    Rooting candidate = root_graph_at(g, v);
    if (murua_compare(candidate.tree, best.tree) > 0) {
      best = std::move(candidate);
      best_vertex = v;
    }
  }
  return {std::move(best), best_vertex};
}

}  // namespace

struct FreeTreeBuilder {
  // Builds the value from an already-maximal representative.
  static FreeTree build(RootedTree representative) {
    FreeTree out;
    out.colors_.resize(representative.size());
    out.parent_.assign(representative.size(), -1);
    out.depth_.assign(representative.size(), 0);
    int next = 0;
    auto walk = [&](auto&& self, const RootedTree& node, int parent, int d) -> void {
      const int id = next++;
      out.colors_[id] = node.color();
      out.parent_[id] = parent;
      out.depth_[id] = d;
      for (const RootedTree& c : node.children()) self(self, c, id, d + 1);
    };
    walk(walk, representative, -1, 0);
    out.representative_ = std::move(representative);
    out.split_ = find_split(out);
    return out;
  }

  // Canonicalizes an arbitrary adjacency form; perm maps original vertex ids
  // to canonical preorder indices.
  static std::pair<FreeTree, std::vector<int>> canonicalize(const Graph& g) {
    auto [rooting, root_vertex] = maximal_rooting(g);
    (void)root_vertex;
    std::vector<int> perm(g.size());
    for (int k = 0; k < g.size(); ++k) perm[rooting.order[k]] = k;
    return {build(std::move(rooting.tree)), std::move(perm)};
  }

  static Graph graph(const FreeTree& t) {
    Graph g;
    g.colors = t.colors_;
    g.adj.resize(t.size());
    for (int v = 1; v < t.size(); ++v) {
      g.adj[t.parent_[v]].push_back(v);
      g.adj[v].push_back(t.parent_[v]);
    }
    return g;
  }

 private:
  // Looks for an edge whose two components, rooted at its ends, are equal.
  static std::optional<FreeTree::Split> find_split(const FreeTree& t) {
    const int n = t.size();
    if (n % 2 != 0) return std::nullopt;
    Graph g = graph(t);
    std::vector<char> in_subtree(n);
    for (int c = 1; c < n; ++c) {
      // Vertices of the subtree at c are the preorder range [c, c + size).
      Rooting below = root_graph_at_marked(g, c, t.parent_[c]);
      if (below.tree.size() * 2 != n) continue;
      std::fill(in_subtree.begin(), in_subtree.end(), 0);
      for (int id : below.order) in_subtree[id] = 1;
      Rooting above = rest_rooted_at(g, in_subtree, t.parent_[c]);
      if (below.tree == above.tree)
        return FreeTree::Split{below.tree, t.parent_[c], c};
    }
    return std::nullopt;
  }

  static Rooting root_graph_at_marked(const Graph& g, int root, int parent) {
    return root_graph_at(g, root, parent);
  }

  // Roots the complement of a vertex subset at `root`.
  static Rooting rest_rooted_at(const Graph& g, const std::vector<char>& skip, int root) {
    Graph rest;
    std::vector<int> remap(g.size(), -1);
    for (int v = 0; v < g.size(); ++v) {
      if (skip[v]) continue;
      remap[v] = rest.size();
      rest.colors.push_back(g.colors[v]);
    }
    rest.adj.resize(rest.colors.size());
    for (int v = 0; v < g.size(); ++v) {
      if (skip[v]) continue;
      for (int w : g.adj[v])
        if (!skip[w]) rest.adj[remap[v]].push_back(remap[w]);
    }
    return root_graph_at(rest, remap[root]);
  }
};

FreeTree::FreeTree(const RootedTree& rooting) {
  *this = FreeTreeBuilder::canonicalize(graph_of(rooting)).first;
}

FreeTree FreeTree::from_edges(std::vector<Color> colors,
                              const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(colors.size());
  if (n < 1) throw std::invalid_argument("from_edges: need at least one vertex");
  if (static_cast<int>(edges.size()) != n - 1)
    throw std::invalid_argument("from_edges: a tree on n vertices has n-1 edges");
  Graph g;
  g.colors = std::move(colors);
  g.adj.resize(n);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("from_edges: vertex index out of range");
    if (a == b) throw std::invalid_argument("from_edges: self-loop rejected");
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  }
  // n-1 edges and connectivity make a tree; BFS check rejects duplicates too.
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int w : g.adj[queue[i]])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  if (static_cast<int>(queue.size()) != n)
    throw std::invalid_argument("from_edges: edge list is disconnected or cyclic");
  return FreeTreeBuilder::canonicalize(g).first;
}

Color FreeTree::color(int v) const {
  if (v < 0 || v >= size()) throw std::invalid_argument("color: vertex out of range");
  return colors_[v];
}

int FreeTree::parent(int v) const {
  if (v < 0 || v >= size()) throw std::invalid_argument("parent: vertex out of range");
  return parent_[v];
}

int FreeTree::depth(int v) const {
  if (v < 0 || v >= size()) throw std::invalid_argument("depth: vertex out of range");
  return depth_[v];
}

std::vector<std::pair<int, int>> FreeTree::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(size() - 1);
  for (int v = 1; v < size(); ++v) out.emplace_back(parent_[v], v);
  return out;
}

RootedTree FreeTree::root_at(int v) const { return rooting_with_map(v).first; }

std::pair<RootedTree, std::vector<int>> FreeTree::rooting_with_map(int v) const {
  if (v < 0 || v >= size())
    throw std::invalid_argument("root_at: vertex out of range");
  Rooting r = root_graph_at(FreeTreeBuilder::graph(*this), v);
  std::vector<int> map(size());
  for (int k = 0; k < size(); ++k) map[r.order[k]] = k;
  return {std::move(r.tree), std::move(map)};
}

Sign FreeTree::epsilon(int v) const {
  if (v < 0 || v >= size())
    throw std::invalid_argument("epsilon: vertex out of range");
  if (superfluous()) return Sign::zero;
  return parity_sign(depth_[v]);
}

std::pair<RootedTree, int> canonical_rooting(const RootedTree& t) {
  Graph g = graph_of(t);
  auto [rooting, vertex] = maximal_rooting(g);
  return {std::move(rooting.tree), vertex};
}

LinkedTree link_tracked(const FreeTree& sigma, int v, const FreeTree& tau, int w) {
  if (v < 0 || v >= sigma.size() || w < 0 || w >= tau.size())
    throw std::invalid_argument("link: vertex out of range");
  Graph g = FreeTreeBuilder::graph(sigma);
  const Graph gt = FreeTreeBuilder::graph(tau);
  const int offset = sigma.size();
  g.colors.insert(g.colors.end(), gt.colors.begin(), gt.colors.end());
  g.adj.resize(g.colors.size());
  for (int u = 0; u < gt.size(); ++u)
    for (int x : gt.adj[u]) g.adj[offset + u].push_back(offset + x);
  g.adj[v].push_back(offset + w);
  g.adj[offset + w].push_back(v);
  auto [tree, perm] = FreeTreeBuilder::canonicalize(g);
  LinkedTree out{std::move(tree), {}, {}};
  out.first.assign(perm.begin(), perm.begin() + offset);
  out.second.assign(perm.begin() + offset, perm.end());
  return out;
}

FreeTree link(const FreeTree& sigma, int v, const FreeTree& tau, int w) {
  return link_tracked(sigma, v, tau, w).tree;
}

int rooting_count(const RootedTree& t, const FreeTree& tau) {
  int count = 0;
  for (int v = 0; v < tau.size(); ++v)
    if (tau.root_at(v) == t) ++count;
  return count;
}

}  // namespace treelie
