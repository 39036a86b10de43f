#include <doctest.h>

#include "treelie/poly_io.hpp"
#include "treelie/verify.hpp"

using namespace treelie;

TEST_CASE("verification drivers pass on small bounds") {
  CHECK(verify_theorem4(5, 1).passed());
  CHECK(verify_diamond_antisymmetry(5, 1).passed());
  CHECK(verify_diamond_jacobi(6, 1).passed());
  CHECK(verify_prop2(6, 1).passed());
  CHECK(verify_lemma1(6, 1).passed());
}

TEST_CASE("worker count does not change the report") {
  VerifyOptions serial;
  VerifyOptions parallel;
  parallel.jobs = 3;
  const VerifyOutcome a = verify_theorem4(6, 1, serial);
  const VerifyOutcome b = verify_theorem4(6, 1, parallel);
  CHECK(a.cases == b.cases);
  CHECK(a.failures == b.failures);
  CHECK(a.details == b.details);

  const Polynomial h = parse_polynomial("t1^2*t2 + t1*t2^2 + t2^3", 2);
  const VerifyOutcome c = verify_prop5(4, h, serial);
  const VerifyOutcome d = verify_prop5(4, h, parallel);
  CHECK(c.details == d.details);
}

TEST_CASE("prop5 offsets are zero for a valuation-3 hamiltonian") {
  const Polynomial h = parse_polynomial("t1^2*t2 + t1*t2^2 + t2^3", 2);
  const VerifyOutcome outcome = verify_prop5(4, h);
  CHECK(outcome.passed());
  for (const std::string& line : outcome.details)
    CHECK(line.substr(line.size() - 4) == " = 0");
  CHECK(outcome.details.size() == static_cast<std::size_t>(outcome.cases));
}
