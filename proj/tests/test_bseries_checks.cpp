#include <doctest.h>

#include <random>
#include <sstream>

#include "treelie/bseries_checks.hpp"
#include "treelie/butcher.hpp"
#include "treelie/elementary.hpp"
#include "treelie/poly_io.hpp"
#include "treelie/symplectic.hpp"
#include "treelie/tree_algebra.hpp"
#include "treelie/tree_io.hpp"

using namespace treelie;

namespace {

RootedTree rt(const char* text) { return parse_rooted(text); }

CoefficientMap define_up_to(int n, const Rational& value = Rational(0)) {
  CoefficientMap alpha;
  auto by_size = enumerate_rooted_upto(n, 1);
  for (int m = 1; m <= n; ++m)
    for (const RootedTree& t : by_size[m]) alpha.set(t, value);
  return alpha;
}

// Random sign-consistent map: random free coefficients expanded to rootings.
CoefficientMap random_sign_consistent(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  FreeCoefficientMap phi;
  for (int m = 1; m <= n; ++m)
    for (const FreeTree& tau : enumerate_free(m, 1))
      if (!tau.superfluous()) phi.set(tau, Rational(num(rng), den(rng)));
  return expand(phi, n);
}

}  // namespace

TEST_CASE("hamiltonian condition checker") {
  CoefficientMap alpha;
  alpha.set(rt("()"), Rational(1));
  alpha.set(rt("(())"), Rational(0));
  alpha.set(rt("((()))"), Rational(1));
  alpha.set(rt("(()())"), Rational(-1));
  const CheckReport report = check_hamiltonian_condition(alpha, 3);
  CHECK(report.passed());
  CHECK(report.cases == 2);  // (•,•) and (•,2-chain)

  // α(t∘t) = 0 is forced: a nonzero 2-chain coefficient violates at (•,•).
  CoefficientMap bad;
  bad.set(rt("()"), Rational(1));
  bad.set(rt("(())"), Rational(1));
  const CheckReport violated = check_hamiltonian_condition(bad, 2);
  REQUIRE(violated.violations.size() == 1);
  CHECK(violated.violations[0].s == rt("()"));
  CHECK(violated.violations[0].t == rt("()"));
  CHECK(violated.violations[0].lhs == 2);

  bad.set_empty(Rational(1));
  CHECK_THROWS_AS(check_hamiltonian_condition(bad, 2), std::invalid_argument);

  CoefficientMap undefined;
  undefined.set(rt("()"), Rational(1));
  CHECK_THROWS_AS(check_hamiltonian_condition(undefined, 2), std::out_of_range);
}

TEST_CASE("canonical condition checker") {
  // Midpoint weights satisfy the canonical condition.
  const CoefficientMap midpoint = rk_coefficient_map(ButcherTableau::midpoint(), 6);
  CHECK(midpoint.at(rt("((()))")) + midpoint.at(rt("(()())")) ==
        midpoint.at(rt("()")) * midpoint.at(rt("(())")));
  CHECK(check_canonical_condition(midpoint, 6).passed());

  CoefficientMap pair;
  pair.set(rt("()"), Rational(1));
  pair.set(rt("(())"), Rational(1, 2));
  CHECK(check_canonical_condition(pair, 2).passed());

  pair.set(rt("(())"), Rational(0));
  const CheckReport violated = check_canonical_condition(pair, 2);
  REQUIRE(violated.violations.size() == 1);
  CHECK(violated.violations[0].rhs == 1);
}

TEST_CASE("sign consistency checker") {
  CoefficientMap alpha;
  alpha.set(rt("()"), Rational(1));
  alpha.set(rt("(())"), Rational(0));
  alpha.set(rt("((()))"), Rational(1));
  alpha.set(rt("(()())"), Rational(-1));
  CHECK(check_sign_consistency(alpha, 3).passed());

  // Rootings of P4 must carry zero.
  CoefficientMap p4 = define_up_to(4);
  p4.set(rt("(((())))"), Rational(1));
  const CheckReport zero_required = check_sign_consistency(p4, 4);
  CHECK_FALSE(zero_required.passed());

  // Equal signs across the two rootings of P3 violate.
  CoefficientMap equal_signs;
  equal_signs.set(rt("()"), Rational(0));
  equal_signs.set(rt("(())"), Rational(0));
  equal_signs.set(rt("((()))"), Rational(1));
  equal_signs.set(rt("(()())"), Rational(1));
  const CheckReport flipped = check_sign_consistency(equal_signs, 3);
  REQUIRE_FALSE(flipped.passed());
  CHECK(flipped.violations[0].s == rt("((()))"));
  CHECK(flipped.violations[0].t == rt("(()())"));
}

TEST_CASE("maps satisfying the pair condition are sign-consistent") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 4; ++trial) {
    const CoefficientMap alpha = random_sign_consistent(6, rng);
    CHECK(check_hamiltonian_condition(alpha, 6).passed());
    CHECK(check_sign_consistency(alpha, 6).passed());
  }
}

TEST_CASE("compress and expand") {
  CoefficientMap alpha;
  alpha.set(rt("()"), Rational(1));
  alpha.set(rt("(())"), Rational(0));
  alpha.set(rt("((()))"), Rational(1));
  alpha.set(rt("(()())"), Rational(-1));
  const FreeCoefficientMap phi = compress(alpha, 3);
  CHECK(phi.at(parse_free("free:(()())")) == -1);
  CHECK(phi.at(parse_free("free:()")) == 1);
  CHECK(phi.terms().size() == 2);  // P2 dropped

  const CoefficientMap back = expand(phi, 3);
  CHECK(back.empty_coefficient() == 0);
  CHECK(back.terms() == alpha.terms());

  // Round-trip on seeded random sign-consistent maps at n = 5.
  std::mt19937 rng(555);
  for (int trial = 0; trial < 4; ++trial) {
    const CoefficientMap map = random_sign_consistent(5, rng);
    const CoefficientMap round = expand(compress(map, 5), 5);
    CHECK(round.terms() == map.terms());
  }

  // Sign-inconsistent input is rejected.
  CoefficientMap inconsistent = define_up_to(3);
  inconsistent.set(rt("((()))"), Rational(1));
  CHECK_THROWS_AS(compress(inconsistent, 3), std::invalid_argument);
  CoefficientMap nonzero_empty = define_up_to(2);
  nonzero_empty.set_empty(Rational(1));
  CHECK_THROWS_AS(compress(nonzero_empty, 2), std::invalid_argument);

  // Zero map compresses to all-zero free coefficients.
  const FreeCoefficientMap zeros = compress(define_up_to(3), 3);
  for (const auto& [tau, c] : zeros.terms()) CHECK(c == 0);
}

TEST_CASE("rooted and free B-series evaluations agree termwise") {
  std::mt19937 rng(31337);
  const CoefficientMap alpha = random_sign_consistent(5, rng);
  ColorAssignment a;
  a.assign(Color{0},
           hamiltonian_vf(parse_polynomial("t1^2*t2 + t1*t2^2 + t2^3", 2)));
  const std::vector<Rational> y0{Rational(1, 2), Rational(1, 3)};
  const auto rooted_series = bseries_truncated(alpha, a, y0, 5);

  const FreeCoefficientMap phi = compress(alpha, 5);
  for (int k = 1; k <= 5; ++k) {
    std::vector<Rational> acc(2, Rational(0));
    for (const FreeTree& tau : enumerate_free(k, 1)) {
      if (tau.superfluous()) continue;
      const Rational weight =
          phi.at(tau) / Rational(symmetry_factor(tau.representative()));
      const auto value = elementary_differential(xtilde(tau), a)(y0);
      for (int i = 0; i < 2; ++i) acc[i] += weight * value[i];
    }
    CHECK(acc == rooted_series[k]);
  }
}

TEST_CASE("coefficient files and reports") {
  const char* text =
      "# weights\n"
      "empty 1\n"
      "() 1\n"
      "(()) 1/2\n";
  const CoefficientMap alpha = CoefficientMap::parse(text);
  CHECK(alpha.empty_coefficient() == 1);
  CHECK(alpha.at(rt("(())")) == Rational(1, 2));
  CHECK(CoefficientMap::parse(alpha.serialize()).terms() == alpha.terms());
  CHECK(alpha.undefined_up_to(3).size() == 2);

  CoefficientMap bad;
  bad.set(rt("()"), Rational(1));
  bad.set(rt("(())"), Rational(1));
  std::ostringstream out;
  out << check_hamiltonian_condition(bad, 2);
  CHECK(out.str() ==
        "VIOLATION () () lhs=2 rhs=0\n"
        "FAIL hamiltonian-condition pairs=1 violations=1\n");

  std::ostringstream ok;
  CoefficientMap good;
  good.set(rt("()"), Rational(1));
  good.set(rt("(())"), Rational(0));
  ok << check_hamiltonian_condition(good, 2);
  CHECK(ok.str() == "PASS hamiltonian-condition pairs=1 violations=0\n");
}

TEST_CASE("free coefficient files reject superfluous keys") {
  FreeCoefficientMap phi;
  CHECK_THROWS_AS(phi.set(parse_free("free:(())"), Rational(1)),
                  std::invalid_argument);
  phi.set(parse_free("free:(()())"), Rational(2, 3));
  CHECK(FreeCoefficientMap::parse(phi.serialize()).at(parse_free("free:(()())")) ==
        Rational(2, 3));
}
