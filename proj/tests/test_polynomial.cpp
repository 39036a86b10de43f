#include <doctest.h>

#include "treelie/poly_io.hpp"

using namespace treelie;

namespace {
Polynomial pp(const char* text, int nvars) { return parse_polynomial(text, nvars); }
}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  CHECK(x + y == pp("t1 + t2", 2));
  CHECK(x * x * y == pp("t1^2*t2", 2));
  CHECK((x + y) * (x - y) == pp("t1^2 + -1*t2^2", 2));
  Polynomial z = x;
  z -= x;
  CHECK(z.zero());
  CHECK((Rational(1, 2) * (x + x)) == x);
  CHECK_THROWS_AS(x + Polynomial::variable(3, 0), std::invalid_argument);
}

TEST_CASE("derivative and evaluation") {
  const Polynomial p = pp("1 * t1^2*t2 + -1/2 * t2^3", 2);
  CHECK(p.derivative(0) == pp("2 * t1*t2", 2));
  CHECK(p.derivative(1) == pp("t1^2 + -3/2 * t2^2", 2));
  const std::vector<Rational> point{Rational(2), Rational(3)};
  CHECK(p(point) == Rational(12) - Rational(27, 2));
  CHECK(p.total_degree() == 3);
  CHECK(p.constant_term() == 0);
  CHECK_FALSE(p.is_constant());
  CHECK(Polynomial::constant(2, Rational(5)).is_constant());
}

TEST_CASE("polynomial text round-trips") {
  const char* samples[] = {"0", "5", "-1/2", "1 * t1^2*t2 + -1/2 * t2^3",
                           "1 * t1 + 1 * t2^4"};
  for (const char* text : samples) {
    const Polynomial p = pp(text, 2);
    CHECK(parse_polynomial(format(p), 2) == p);
  }
  // Canonical printing: descending lexicographic monomials, '*' separated.
  CHECK(format(pp("-1/2*t2^3 + t1^2*t2", 2)) == "1 * t1^2*t2 + -1/2 * t2^3");
  CHECK(format(Polynomial(2)) == "0");
  // Variable-count inference.
  CHECK(parse_polynomial("t1*t3").nvars() == 3);
  CHECK_THROWS_AS(parse_polynomial("t3", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1 +", 2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("t0", 2), ParseError);
}

TEST_CASE("vector field text") {
  const PolyVectorField f = parse_vector_field("-1 * t2\n1 * t1\n");
  CHECK(f.dimension() == 2);
  CHECK(f.component(0) == pp("-1 * t2", 2));
  CHECK(format(f) == "-1 * t2\n1 * t1\n");
  CHECK(parse_vector_field("t1\nt2\nt3").dimension() == 3);
  // A component may not reference variables beyond the line count.
  CHECK_THROWS_AS(parse_vector_field("t1\nt3"), ParseError);
}

TEST_CASE("points") {
  const auto point = parse_point("1/2,-3,0");
  REQUIRE(point.size() == 3);
  CHECK(point[0] == Rational(1, 2));
  CHECK(point[1] == -3);
  CHECK(format_point(point) == "1/2,-3,0");
}
