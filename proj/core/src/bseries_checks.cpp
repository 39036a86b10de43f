#include "treelie/bseries_checks.hpp"

#include <ostream>
#include <stdexcept>

#include "treelie/tree_io.hpp"

namespace treelie {

std::ostream& operator<<(std::ostream& out, const CheckReport& report) {
  for (const Violation& v : report.violations)
    out << "VIOLATION " << format(v.s) << " " << format(v.t) << " lhs="
        << v.lhs << " rhs=" << v.rhs << "\n";
  out << (report.passed() ? "PASS" : "FAIL") << " " << report.name
      << " pairs=" << report.cases << " violations=" << report.violations.size()
      << "\n";
  return out;
}

namespace {

// Runs `condition(s, t)` over unordered pairs with |s|+|t| <= n, in
// (|s|+|t|, s, t) order. Both Butcher-product conditions are symmetric in
// (s, t), so the s <= t orientation loses nothing.
template <class Condition>
CheckReport check_pairs(std::string name, const CoefficientMap& alpha, int n,
                        const EnumerationLimits& limits, Condition&& condition) {
  CheckReport report{std::move(name), 0, {}};
  auto by_size = enumerate_rooted_upto(n > 0 ? n : 1, alpha.color_count(), limits);
  for (int total = 2; total <= n; ++total) {
    for (int ns = 1; 2 * ns <= total; ++ns) {
      const int nt = total - ns;
      for (const RootedTree& s : by_size[ns]) {
        for (const RootedTree& t : by_size[nt]) {
          if (ns == nt && murua_compare(t, s) < 0) continue;
          ++report.cases;
          auto [lhs, rhs] = condition(s, t);
          if (lhs != rhs) report.violations.push_back({s, t, lhs, rhs});
        }
      }
    }
  }
  return report;
}

}  // namespace

CheckReport check_hamiltonian_condition(const CoefficientMap& alpha, int n,
                                        const EnumerationLimits& limits) {
  if (alpha.empty_coefficient() != 0)
    throw std::invalid_argument(
        "hamiltonian condition requires a zero empty-tree coefficient");
  return check_pairs("hamiltonian-condition", alpha, n, limits,
                     [&](const RootedTree& s, const RootedTree& t) {
                       return std::pair<Rational, Rational>(
                           alpha.at(butcher(s, t)) + alpha.at(butcher(t, s)),
                           Rational(0));
                     });
}

CheckReport check_canonical_condition(const CoefficientMap& alpha, int n,
                                      const EnumerationLimits& limits) {
  return check_pairs("canonical-condition", alpha, n, limits,
                     [&](const RootedTree& s, const RootedTree& t) {
                       return std::pair<Rational, Rational>(
                           alpha.at(butcher(s, t)) + alpha.at(butcher(t, s)),
                           alpha.at(s) * alpha.at(t));
                     });
}

CheckReport check_sign_consistency(const CoefficientMap& alpha, int n,
                                   const EnumerationLimits& limits) {
  CheckReport report{"sign-consistency", 0, {}};
  auto by_size = enumerate_free_upto(n > 0 ? n : 1, alpha.color_count(), limits);
  for (int m = 1; m <= n; ++m) {
    for (const FreeTree& tau : by_size[m]) {
      const RootedTree& rep = tau.representative();
      const Rational rep_value = tau.superfluous() ? Rational(0) : alpha.at(rep);
      // Distinct rootings only: vertices with equal rootings carry equal ε.
      std::map<RootedTree, Rational> expected;
      for (int v = 0; v < tau.size(); ++v)
        expected.try_emplace(tau.root_at(v), Rational(to_int(tau.epsilon(v))) * rep_value);
      for (const auto& [rooting, value] : expected) {
        ++report.cases;
        const Rational actual = alpha.at(rooting);
        if (actual != value) report.violations.push_back({rooting, rep, actual, value});
      }
    }
  }
  return report;
}

FreeCoefficientMap compress(const CoefficientMap& alpha, int n,
                            const EnumerationLimits& limits) {
  if (alpha.empty_coefficient() != 0)
    throw std::invalid_argument("compress requires a zero empty-tree coefficient");
  CheckReport signs = check_sign_consistency(alpha, n, limits);
  if (!signs.passed())
    throw std::invalid_argument("compress requires a sign-consistent map; " +
                                format(signs.violations.front().s) + " violates");
  FreeCoefficientMap out;
  auto by_size = enumerate_free_upto(n > 0 ? n : 1, alpha.color_count(), limits);
  for (int m = 1; m <= n; ++m)
    for (const FreeTree& tau : by_size[m])
      if (!tau.superfluous()) out.set(tau, alpha.at(tau.representative()));
  return out;
}

CoefficientMap expand(const FreeCoefficientMap& phi, int n,
                      const EnumerationLimits& limits) {
  CoefficientMap out;
  out.set_empty(Rational(0));
  auto by_size = enumerate_free_upto(n > 0 ? n : 1, phi.color_count(), limits);
  for (int m = 1; m <= n; ++m) {
    for (const FreeTree& tau : by_size[m]) {
      const Rational rep_value = tau.superfluous() ? Rational(0) : phi.at(tau);
      for (int v = 0; v < tau.size(); ++v)
        out.set(tau.root_at(v), Rational(to_int(tau.epsilon(v))) * rep_value);
    }
  }
  return out;
}

}  // namespace treelie
