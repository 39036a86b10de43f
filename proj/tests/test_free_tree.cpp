#include <doctest.h>

#include <map>
#include <set>

#include "treelie/enumerate.hpp"
#include "treelie/tree_io.hpp"

using namespace treelie;

namespace {
RootedTree rt(const char* text) { return parse_rooted(text); }
FreeTree ft(const char* text) { return parse_free(text); }
}  // namespace

TEST_CASE("projection identifies rootings of one path") {
  CHECK(project(rt("((()))")) == project(rt("(()())")));
  CHECK(project(rt("((()))")).representative() == rt("(()())"));
}

TEST_CASE("canonical representative examples") {
  const FreeTree p3 = ft("free:(()())");
  CHECK(p3.representative() == rt("(()())"));
  CHECK(p3.canonical_root() == 0);

  const FreeTree s4 = ft("free:(()()())");
  CHECK(s4.representative() == rt("(()()())"));

  // canonical_rooting reports a maximising vertex of the input rooting:
  // for the 3-chain the middle vertex (preorder index 1) roots the cherry.
  auto [rep, vertex] = canonical_rooting(rt("((()))"));
  CHECK(rep == rt("(()())"));
  CHECK(vertex == 1);
}

TEST_CASE("root_at and project are mutually inverse") {
  for (int n = 1; n <= 6; ++n) {
    for (const RootedTree& t : enumerate_rooted(n, 1)) {
      const FreeTree tau = project(t);
      // Some vertex of τ roots t again.
      CHECK(rooting_count(t, tau) >= 1);
      for (int v = 0; v < tau.size(); ++v) CHECK(project(tau.root_at(v)) == tau);
    }
  }
}

TEST_CASE("rooting_with_map matches preorder positions") {
  const FreeTree p3 = ft("free:(()())");
  auto [chain, map] = p3.rooting_with_map(1);  // root at a leaf of the cherry
  CHECK(chain == rt("((()))"));
  CHECK(map[1] == 0);  // the chosen leaf becomes the root
  CHECK(map[0] == 1);  // the old centre hangs below it
}

TEST_CASE("superfluous detection with witnesses") {
  const FreeTree p2 = ft("free:(())");
  REQUIRE(p2.superfluous());
  CHECK(p2.split()->half == rt("()"));

  CHECK_FALSE(ft("free:(()())").superfluous());

  const FreeTree p4 = project(rt("(((())))"));
  REQUIRE(p4.superfluous());
  CHECK(p4.split()->half == rt("(())"));

  // Colours must match exactly for the split halves.
  const FreeTree colored_p2 = project(rt("((c1))"));
  CHECK_FALSE(colored_p2.superfluous());
  const FreeTree colored_pair = project(rt("(c1(c1))"));
  CHECK(colored_pair.superfluous());
}

TEST_CASE("superfluous trees agree with the maximiser-multiplicity oracle") {
  for (int n = 1; n <= 8; ++n) {
    for (const FreeTree& tau : enumerate_free(n, 1)) {
      const int maximisers = rooting_count(tau.representative(), tau);
      CHECK(tau.superfluous() == (maximisers >= 2));
      if (tau.superfluous()) CHECK(maximisers == 2);
    }
  }
}

TEST_CASE("superfluous free trees with 2k vertices biject with rooted trees on k") {
  const long rooted_counts[] = {0, 1, 1, 2, 4, 9};
  for (int k = 1; k <= 5; ++k) {
    std::set<FreeTree> doubled;
    for (const RootedTree& s : enumerate_rooted(k, 1))
      doubled.insert(project(butcher(s, s)));
    CHECK(static_cast<long>(doubled.size()) == rooted_counts[k]);
    long enumerated = 0;
    for (const FreeTree& tau : enumerate_free(2 * k, 1)) {
      if (tau.superfluous()) {
        ++enumerated;
        CHECK(doubled.count(tau) == 1);
      }
    }
    CHECK(enumerated == rooted_counts[k]);
    // Odd sizes have none.
    if (2 * k + 1 <= 10)
      for (const FreeTree& tau : enumerate_free(2 * k + 1, 1))
        CHECK_FALSE(tau.superfluous());
  }
}

TEST_CASE("epsilon values on paths") {
  const FreeTree p3 = ft("free:(()())");
  CHECK(p3.epsilon(0) == Sign::plus);   // centre = canonical root
  CHECK(p3.epsilon(1) == Sign::minus);  // ends at distance 1
  CHECK(p3.epsilon(2) == Sign::minus);
  const FreeTree p4 = project(rt("(((())))"));
  for (int v = 0; v < 4; ++v) CHECK(p4.epsilon(v) == Sign::zero);
  CHECK_THROWS_AS(p3.epsilon(3), std::invalid_argument);
}

TEST_CASE("epsilon is constant on sets of equal rootings") {
  // Vertices with equal rootings form one automorphism orbit, so this is
  // the invariance of ε under Aut τ without materializing the group.
  for (int n = 1; n <= 8; ++n) {
    for (const FreeTree& tau : enumerate_free(n, 1)) {
      std::map<RootedTree, Sign> seen;
      for (int v = 0; v < tau.size(); ++v) {
        auto [it, inserted] = seen.try_emplace(tau.root_at(v), tau.epsilon(v));
        if (!inserted) CHECK(it->second == tau.epsilon(v));
      }
    }
  }
}

TEST_CASE("linking examples") {
  const FreeTree dot = ft("free:()");
  CHECK(link(dot, 0, dot, 0) == ft("free:(())"));
  CHECK(link(dot, 0, ft("free:(()())"), 0) == ft("free:(()()())"));
  // Linking a vertex to one end of P3 and rooting at the far end gives the
  // 4-chain.
  const FreeTree p3 = ft("free:(()())");
  LinkedTree linked = link_tracked(dot, 0, p3, 1);
  CHECK(linked.tree.root_at(linked.second[2]) == rt("(((())))"));
  CHECK_THROWS_AS(link(dot, 1, p3, 0), std::invalid_argument);
}

TEST_CASE("linking matches grafting on every rooting") {
  // (σ ∨_{v,w} τ)_y = σ_v →_w τ_y and (σ ∨_{v,w} τ)_x = τ_w →_v σ_x,
  // for all vertex choices with |σ|+|τ| <= 8.
  auto free_trees = [](int max_n) {
    std::vector<FreeTree> out;
    for (int n = 1; n <= max_n; ++n)
      for (FreeTree& tau : enumerate_free(n, 1)) out.push_back(std::move(tau));
    return out;
  };
  const auto trees = free_trees(7);
  for (const FreeTree& sigma : trees) {
    for (const FreeTree& tau : trees) {
      if (sigma.size() + tau.size() > 8) continue;
      for (int v = 0; v < sigma.size(); ++v) {
        for (int w = 0; w < tau.size(); ++w) {
          const LinkedTree linked = link_tracked(sigma, v, tau, w);
          for (int y = 0; y < tau.size(); ++y) {
            auto [tau_y, tau_map] = tau.rooting_with_map(y);
            CHECK(linked.tree.root_at(linked.second[y]) ==
                  graft_at(sigma.root_at(v), tau_y, tau_map[w]));
          }
          for (int x = 0; x < sigma.size(); ++x) {
            auto [sigma_x, sigma_map] = sigma.rooting_with_map(x);
            CHECK(linked.tree.root_at(linked.first[x]) ==
                  graft_at(tau.root_at(w), sigma_x, sigma_map[v]));
          }
        }
      }
    }
  }
}

TEST_CASE("rooting counts") {
  const FreeTree p3 = ft("free:(()())");
  CHECK(rooting_count(rt("((()))"), p3) == 2);
  CHECK(rooting_count(rt("(()())"), p3) == 1);
  const FreeTree s4 = ft("free:(()()())");
  CHECK(rooting_count(rt("((()()))"), s4) == 3);
  CHECK(symmetry_factor(rt("(()()())")) / symmetry_factor(rt("((()()))")) == 3);
}

TEST_CASE("from_edges validates the input") {
  const FreeTree p3 =
      FreeTree::from_edges({Color{0}, Color{0}, Color{0}}, {{0, 1}, {1, 2}});
  CHECK(p3 == ft("free:(()())"));
  // Colours survive: centre colour 1.
  const FreeTree colored =
      FreeTree::from_edges({Color{0}, Color{1}, Color{0}}, {{0, 1}, {1, 2}});
  CHECK(colored.representative().color() == Color{1});

  using Edges = std::vector<std::pair<int, int>>;
  CHECK_THROWS_AS(FreeTree::from_edges({Color{0}, Color{0}}, Edges{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      FreeTree::from_edges({Color{0}, Color{0}, Color{0}, Color{0}},
                           Edges{{0, 1}, {2, 3}, {0, 1}}),  // duplicate + split
      std::invalid_argument);
  CHECK_THROWS_AS(FreeTree::from_edges({Color{0}, Color{0}, Color{0}},
                                       Edges{{0, 1}, {2, 5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FreeTree::from_edges({Color{0}, Color{0}}, Edges{{0, 0}}),
                  std::invalid_argument);
}
