// treelie command line: enumeration, order queries, X̃/diamond computation,
// theorem verification drivers and coefficient-file audits. All input and
// output is plain text; exit status is 0 on success, 1 when a check or
// verification reports violations, 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "treelie/bseries_checks.hpp"
#include "treelie/butcher.hpp"
#include "treelie/elementary.hpp"
#include "treelie/poly_io.hpp"
#include "treelie/tree_algebra.hpp"
#include "treelie/tree_io.hpp"
#include "treelie/verify.hpp"

namespace {

using namespace treelie;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Tree arguments are inline text or @file references.
std::string tree_argument(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return slurp(arg.substr(1));
  return arg;
}

// A rooted-combination argument: @file holds a combination, inline text is a
// single tree with coefficient 1.
RootedCombination rooted_combination_argument(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@')
    return parse_rooted_combination(slurp(arg.substr(1)));
  return RootedCombination(parse_rooted(arg));
}

FreeCombination free_combination_argument(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@')
    return parse_free_combination(slurp(arg.substr(1)));
  return FreeCombination(parse_free(arg));
}

EnumerationLimits effective_limits(int n, bool unsafe) {
  EnumerationLimits limits;
  if (unsafe && (n > limits.one_color || n > limits.multi_color)) {
    std::cerr << "warning: overriding enumeration caps up to n=" << n << "\n";
    limits = EnumerationLimits::unbounded(n);
  }
  return limits;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact rooted/free tree calculus and B-series coefficient checks"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List canonical trees in Murua order");
  bool enum_rooted = false, enum_free = false, enum_count = false;
  bool enum_superfluous = false, enum_unsafe = false;
  int enum_n = 0, enum_colors = 1;
  enumerate->add_flag("--rooted", enum_rooted, "Enumerate rooted trees");
  enumerate->add_flag("--free", enum_free, "Enumerate free trees");
  enumerate->add_option("-n", enum_n, "Vertex count")->required();
  enumerate->add_option("--colors", enum_colors, "Colour count");
  enumerate->add_flag("--count", enum_count, "Print the count only");
  enumerate->add_flag("--superfluous-only", enum_superfluous,
                      "Keep superfluous free trees only");
  enumerate->add_flag("--unsafe-n", enum_unsafe, "Override the enumeration caps");

  // order-cmp
  auto* order_cmp = app.add_subcommand("order-cmp", "Compare two trees in Murua order");
  std::vector<std::string> order_args;
  order_cmp->add_option("trees", order_args, "Two trees")->expected(2);

  // canonical-rep
  auto* canonical = app.add_subcommand(
      "canonical-rep", "Canonical representative and a maximising vertex");
  std::string canonical_arg;
  canonical->add_option("tree", canonical_arg, "Rooted or free tree")->required();

  // superfluous
  auto* superfluous = app.add_subcommand("superfluous", "Superfluous test with witness");
  std::string superfluous_arg;
  superfluous->add_option("tree", superfluous_arg, "Rooted or free tree")->required();

  // sym
  auto* sym = app.add_subcommand("sym", "Symmetry factor of a rooted tree");
  std::string sym_arg;
  sym->add_option("tree", sym_arg, "Rooted tree")->required();

  // xtilde
  auto* xtilde_cmd = app.add_subcommand("xtilde", "Signed sum of all rootings");
  std::string xtilde_arg;
  xtilde_cmd->add_option("tree", xtilde_arg, "Free tree or @combination-file")->required();

  // diamond
  auto* diamond_cmd = app.add_subcommand("diamond", "Diamond product of free trees");
  std::vector<std::string> diamond_args;
  diamond_cmd->add_option("trees", diamond_args, "Two free trees or @files")->expected(2);

  // bracket
  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of rooted combinations");
  std::vector<std::string> bracket_args;
  bracket_cmd->add_option("trees", bracket_args, "Two rooted trees or @files")->expected(2);

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustively verify a named result");
  std::string verify_name;
  int verify_n = 0, verify_colors = 1, verify_jobs = 1;
  bool verify_unsafe = false;
  std::string verify_hamiltonian;
  verify->add_option("name", verify_name, "theorem4|prop2|prop5|lemma1|jacobi")
      ->required()
      ->check(CLI::IsMember({"theorem4", "prop2", "prop5", "lemma1", "jacobi"}));
  verify->add_option("-n", verify_n, "Size bound")->required();
  verify->add_option("--colors", verify_colors, "Colour count");
  verify->add_option("--hamiltonian", verify_hamiltonian,
                     "Polynomial file for prop5 (defaults to t1^2*t2 + t1*t2^2 + t2^3)");
  verify->add_option("--jobs", verify_jobs, "Worker count");
  verify->add_flag("--unsafe-n", verify_unsafe, "Override the enumeration caps");

  // check
  auto* check = app.add_subcommand("check", "Audit a coefficient file");
  bool check_hamiltonian = false, check_canonical = false, check_signs = false;
  bool check_unsafe = false;
  std::string check_file;
  int check_n = 0;
  check->add_flag("--hamiltonian", check_hamiltonian, "α(s∘t)+α(t∘s)=0");
  check->add_flag("--canonical", check_canonical, "α(s∘t)+α(t∘s)=α(s)α(t)");
  check->add_flag("--signs", check_signs, "α(τ_v)=ε(v,τ)·α(τ_*)");
  check->add_option("file", check_file, "Coefficient file")->required();
  check->add_option("-n", check_n, "Size bound")->required();
  check->add_flag("--unsafe-n", check_unsafe, "Override the enumeration caps");

  // compress
  auto* compress_cmd =
      app.add_subcommand("compress", "Regroup rooted coefficients by free tree");
  std::string compress_file;
  int compress_n = 0;
  bool compress_expand = false, compress_unsafe = false;
  compress_cmd->add_option("file", compress_file, "Coefficient file")->required();
  compress_cmd->add_option("-n", compress_n, "Size bound")->required();
  compress_cmd->add_flag("--expand", compress_expand,
                         "Invert: free-tree coefficients back to rooted ones");
  compress_cmd->add_flag("--unsafe-n", compress_unsafe, "Override the enumeration caps");

  // weights
  auto* weights = app.add_subcommand("weights", "Runge-Kutta elementary weights");
  std::string weights_method, weights_tableau, weights_tree;
  int weights_n = 0;
  bool weights_unsafe = false;
  weights->add_option("--method", weights_method, "Built-in tableau: midpoint|euler")
      ->check(CLI::IsMember({"midpoint", "euler"}));
  weights->add_option("--tableau", weights_tableau, "Tableau file");
  weights->add_option("tree", weights_tree, "Single rooted tree (prints one weight)");
  weights->add_option("-n", weights_n, "Emit a coefficient file for all trees <= n");
  weights->add_flag("--unsafe-n", weights_unsafe, "Override the enumeration caps");

  CLI11_PARSE(app, argc, argv);

  if (enumerate->parsed()) {
    if (enum_rooted == enum_free)
      throw std::runtime_error("enumerate: pass exactly one of --rooted / --free");
    const EnumerationLimits limits = effective_limits(enum_n, enum_unsafe);
    if (enum_rooted) {
      if (enum_superfluous)
        throw std::runtime_error("enumerate: --superfluous-only needs --free");
      auto trees = enumerate_rooted(enum_n, enum_colors, limits);
      if (enum_count) {
        std::cout << trees.size() << "\n";
      } else {
        for (const RootedTree& t : trees) std::cout << format(t) << "\n";
      }
    } else {
      auto trees = enumerate_free(enum_n, enum_colors, limits);
      if (enum_superfluous)
        std::erase_if(trees, [](const FreeTree& t) { return !t.superfluous(); });
      if (enum_count) {
        std::cout << trees.size() << "\n";
      } else {
        for (const FreeTree& t : trees) std::cout << format(t) << "\n";
      }
    }
    return 0;
  }

  if (order_cmp->parsed()) {
    const ParsedTree a = parse_tree(tree_argument(order_args[0]));
    const ParsedTree b = parse_tree(tree_argument(order_args[1]));
    if (a.index() != b.index())
      throw std::runtime_error("order-cmp: cannot compare a rooted and a free tree");
    std::strong_ordering cmp = std::strong_ordering::equal;
    if (std::holds_alternative<RootedTree>(a))
      cmp = std::get<RootedTree>(a) <=> std::get<RootedTree>(b);
    else
      cmp = std::get<FreeTree>(a) <=> std::get<FreeTree>(b);
    std::cout << (cmp < 0 ? "LT" : cmp > 0 ? "GT" : "EQ") << "\n";
    return 0;
  }

  if (canonical->parsed()) {
    const ParsedTree arg = parse_tree(tree_argument(canonical_arg));
    if (std::holds_alternative<RootedTree>(arg)) {
      auto [rep, vertex] = canonical_rooting(std::get<RootedTree>(arg));
      std::cout << format(rep) << " " << vertex << "\n";
    } else {
      const FreeTree& tau = std::get<FreeTree>(arg);
      std::cout << format(tau.representative()) << " " << tau.canonical_root() << "\n";
    }
    return 0;
  }

  if (superfluous->parsed()) {
    const ParsedTree arg = parse_tree(tree_argument(superfluous_arg));
    const FreeTree tau = std::holds_alternative<FreeTree>(arg)
                             ? std::get<FreeTree>(arg)
                             : project(std::get<RootedTree>(arg));
    if (tau.superfluous())
      std::cout << "yes " << format(tau.split()->half) << "\n";
    else
      std::cout << "no\n";
    return 0;
  }

  if (sym->parsed()) {
    std::cout << symmetry_factor(parse_rooted(tree_argument(sym_arg))) << "\n";
    return 0;
  }

  if (xtilde_cmd->parsed()) {
    std::cout << format(xtilde(free_combination_argument(xtilde_arg)));
    return 0;
  }

  if (diamond_cmd->parsed()) {
    std::cout << format(diamond(free_combination_argument(diamond_args[0]),
                                free_combination_argument(diamond_args[1])));
    return 0;
  }

  if (bracket_cmd->parsed()) {
    std::cout << format(lie_bracket(rooted_combination_argument(bracket_args[0]),
                                    rooted_combination_argument(bracket_args[1])));
    return 0;
  }

  if (verify->parsed()) {
    VerifyOptions options;
    options.jobs = verify_jobs;
    options.limits = effective_limits(verify_n, verify_unsafe);
    VerifyOutcome outcome;
    if (verify_name == "theorem4") {
      outcome = verify_theorem4(verify_n, verify_colors, options);
    } else if (verify_name == "prop2") {
      outcome = verify_prop2(verify_n, verify_colors, options);
    } else if (verify_name == "lemma1") {
      outcome = verify_lemma1(verify_n, verify_colors, options);
    } else if (verify_name == "jacobi") {
      VerifyOutcome antisymmetry =
          verify_diamond_antisymmetry(verify_n, verify_colors, options);
      outcome = verify_diamond_jacobi(verify_n, verify_colors, options);
      outcome.cases += antisymmetry.cases;
      outcome.failures += antisymmetry.failures;
      outcome.details.insert(outcome.details.begin(), antisymmetry.details.begin(),
                             antisymmetry.details.end());
    } else {
      const Polynomial hamiltonian =
          verify_hamiltonian.empty()
              ? parse_polynomial("1 * t1^2*t2 + 1 * t1*t2^2 + 1 * t2^3", 2)
              : parse_polynomial(slurp(verify_hamiltonian));
      outcome = verify_prop5(verify_n, hamiltonian, options);
    }
    for (const std::string& line : outcome.details) std::cout << line << "\n";
    std::cout << (outcome.passed() ? "PASS" : "FAIL") << " " << verify_name
              << " cases=" << outcome.cases << " failures=" << outcome.failures << "\n";
    return outcome.passed() ? 0 : 1;
  }

  if (check->parsed()) {
    if (check_hamiltonian + check_canonical + check_signs != 1)
      throw std::runtime_error(
          "check: pass exactly one of --hamiltonian / --canonical / --signs");
    const EnumerationLimits limits = effective_limits(check_n, check_unsafe);
    const CoefficientMap alpha = CoefficientMap::parse(slurp(check_file));
    const auto missing = alpha.undefined_up_to(check_n, limits);
    if (!missing.empty()) {
      for (const RootedTree& t : missing) std::cout << "UNDEFINED " << format(t) << "\n";
      throw std::runtime_error("coefficient file leaves " +
                               std::to_string(missing.size()) +
                               " trees undefined up to n=" + std::to_string(check_n));
    }
    CheckReport report;
    if (check_hamiltonian)
      report = check_hamiltonian_condition(alpha, check_n, limits);
    else if (check_canonical)
      report = check_canonical_condition(alpha, check_n, limits);
    else
      report = check_sign_consistency(alpha, check_n, limits);
    std::cout << report;
    return report.passed() ? 0 : 1;
  }

  if (compress_cmd->parsed()) {
    const EnumerationLimits limits = effective_limits(compress_n, compress_unsafe);
    if (compress_expand) {
      const FreeCoefficientMap phi = FreeCoefficientMap::parse(slurp(compress_file));
      std::cout << expand(phi, compress_n, limits).serialize();
    } else {
      const CoefficientMap alpha = CoefficientMap::parse(slurp(compress_file));
      std::cout << compress(alpha, compress_n, limits).serialize();
    }
    return 0;
  }

  if (weights->parsed()) {
    if (weights_method.empty() == weights_tableau.empty())
      throw std::runtime_error("weights: pass exactly one of --method / --tableau");
    const ButcherTableau tableau =
        !weights_tableau.empty() ? ButcherTableau::parse(slurp(weights_tableau))
        : weights_method == "midpoint" ? ButcherTableau::midpoint()
                                       : ButcherTableau::forward_euler();
    if (!weights_tree.empty()) {
      std::cout << to_string(rk_elementary_weights(
                       tableau, parse_rooted(tree_argument(weights_tree))))
                << "\n";
    } else if (weights_n > 0) {
      const EnumerationLimits limits = effective_limits(weights_n, weights_unsafe);
      std::cout << rk_coefficient_map(tableau, weights_n, limits).serialize();
    } else {
      throw std::runtime_error("weights: pass a tree or -n");
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
