#include <doctest.h>

#include "treelie/elementary.hpp"
#include "treelie/enumerate.hpp"
#include "treelie/poly_io.hpp"
#include "treelie/symplectic.hpp"
#include "treelie/tree_io.hpp"

using namespace treelie;

namespace {

RootedTree rt(const char* text) { return parse_rooted(text); }
FreeTree ft(const char* text) { return parse_free(text); }

ColorAssignment one_dim_square() {
  ColorAssignment a;
  a.assign(Color{0}, PolyVectorField({parse_polynomial("t1^2", 1)}));
  return a;
}

// Fixed degree-2 field on R^2 with generic small coefficients.
ColorAssignment plane_field() {
  ColorAssignment a;
  a.assign(Color{0}, parse_vector_field("1 + 2*t1 + t2 + t1^2 + 3*t1*t2\n"
                                        "2 + -1*t1 + t2^2 + t1*t2"));
  return a;
}

}  // namespace

TEST_CASE("elementary differentials on one variable") {
  const ColorAssignment a = one_dim_square();
  CHECK(elementary_differential(rt("()"), a) == a.field(Color{0}));
  CHECK(elementary_differential(rt("(())"), a) ==
        PolyVectorField({parse_polynomial("2*t1^3", 1)}));
  CHECK(elementary_differential(rt("(()())"), a) ==
        PolyVectorField({parse_polynomial("2*t1^4", 1)}));
}

TEST_CASE("elementary differential requires every colour") {
  const ColorAssignment a = one_dim_square();
  CHECK_THROWS_AS(elementary_differential(rt("(c1)"), a), std::out_of_range);
}

TEST_CASE("the map is a pre-Lie morphism") {
  const ColorAssignment a = plane_field();
  std::vector<RootedTree> trees;
  for (int n = 1; n <= 4; ++n)
    for (RootedTree& t : enumerate_rooted(n, 1)) trees.push_back(std::move(t));
  for (const RootedTree& s : trees)
    for (const RootedTree& t : trees) {
      if (s.size() + t.size() > 5) continue;
      CHECK(elementary_differential(prelie(s, t), a) ==
            vf_prelie(elementary_differential(s, a), elementary_differential(t, a)));
    }
}

TEST_CASE("colored elementary differentials split by generator") {
  ColorAssignment a;
  a.assign(Color{0}, PolyVectorField({parse_polynomial("t1^2", 1)}));
  a.assign(Color{1}, PolyVectorField({parse_polynomial("t1", 1)}));
  // B_+^{c0}(•_{c1}): a_{c1} ▷ a_{c0} = t1 · 2t1.
  CHECK(elementary_differential(rt("((c1))"), a) ==
        PolyVectorField({parse_polynomial("2*t1^2", 1)}));
  CHECK(elementary_differential(rt("(c1(c0))"), a) ==
        PolyVectorField({parse_polynomial("t1^2", 1)}));
}

TEST_CASE("truncated B-series") {
  const ColorAssignment a = one_dim_square();
  const std::vector<Rational> y0{Rational(1)};

  CoefficientMap alpha;
  alpha.set_empty(Rational(1));
  alpha.set(rt("()"), Rational(1));
  auto series = bseries_truncated(alpha, a, y0, 1);
  REQUIRE(series.size() == 2);
  CHECK(series[0][0] == 1);
  CHECK(series[1][0] == 1);

  CoefficientMap empty_only;
  empty_only.set_empty(Rational(1));
  CHECK(bseries_truncated(empty_only, a, y0, 0) ==
        std::vector<std::vector<Rational>>{{Rational(1)}});

  alpha.set(rt("(())"), Rational(1, 2));
  series = bseries_truncated(alpha, a, y0, 2);
  REQUIRE(series.size() == 3);
  CHECK(series[2][0] == 1);  // (1/2)/1 · F(2-chain)(1) = (1/2)·2

  // Undefined coefficients fail loudly.
  CHECK_THROWS_AS(bseries_truncated(alpha, a, y0, 3), std::out_of_range);
}

TEST_CASE("elementary hamiltonians") {
  const Polynomial h = parse_polynomial("t1^2*t2", 2);
  ColorAssignment a;
  a.assign(Color{0}, hamiltonian_vf(h));

  CHECK(elementary_hamiltonian(ft("free:()"), a) == h);
  CHECK(elementary_hamiltonian(project(rt("((c0))")), a).zero());  // P2

  // {H(•), H(P3)} = H(• ⋄ P3) = H(S4), exactly, for this valuation-3 input.
  const Polynomial lhs =
      poisson(elementary_hamiltonian(ft("free:()"), a),
              elementary_hamiltonian(ft("free:(()())"), a));
  CHECK(lhs == elementary_hamiltonian(ft("free:(()()())"), a));
  CHECK(lhs == elementary_hamiltonian(diamond(FreeCombination(ft("free:()")),
                                              FreeCombination(ft("free:(()())"))),
                                      a));

  // Non-hamiltonian assignments are rejected.
  ColorAssignment bad;
  bad.assign(Color{0}, parse_vector_field("1 * t1\n1 * t2"));
  CHECK_THROWS_AS(elementary_hamiltonian(ft("free:()"), bad), std::domain_error);
}

TEST_CASE("xtilde images of hamiltonian assignments stay hamiltonian") {
  ColorAssignment a;
  a.assign(Color{0},
           hamiltonian_vf(parse_polynomial("t1^2*t2 + t1*t2^2 + t2^3", 2)));
  for (int n = 1; n <= 5; ++n)
    for (const FreeTree& tau : enumerate_free(n, 1))
      CHECK(is_hamiltonian(elementary_differential(xtilde(tau), a)));
}
