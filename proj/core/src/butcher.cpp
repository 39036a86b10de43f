#include "treelie/butcher.hpp"

#include <cctype>
#include <stdexcept>

#include "treelie/errors.hpp"

namespace treelie {

ButcherTableau::ButcherTableau(std::vector<std::vector<Rational>> a,
                               std::vector<Rational> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (b_.empty()) throw std::invalid_argument("tableau needs at least one stage");
  if (a_.size() != b_.size())
    throw std::invalid_argument("tableau A must be square with one row per stage");
  for (const auto& row : a_)
    if (row.size() != b_.size())
      throw std::invalid_argument("tableau A must be square with one row per stage");
}

ButcherTableau ButcherTableau::midpoint() {
  return ButcherTableau({{Rational(1, 2)}}, {Rational(1)});
}

ButcherTableau ButcherTableau::forward_euler() {
  return ButcherTableau({{Rational(0)}}, {Rational(1)});
}

ButcherTableau ButcherTableau::parse(std::string_view text) {
  // Strip comments, then read whitespace-separated tokens.
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    } else {
      std::size_t start = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
             text[pos] != '#')
        ++pos;
      tokens.emplace_back(text.substr(start, pos - start));
    }
  }
  if (tokens.empty()) throw ParseError("empty tableau", 0);
  std::size_t next = 0;
  long stages;
  try {
    stages = std::stol(tokens[next++]);
  } catch (const std::exception&) {
    throw ParseError("expected stage count", 0);
  }
  if (stages < 1 || stages > 64) throw ParseError("bad stage count", 0);
  const std::size_t needed = 1 + static_cast<std::size_t>(stages) * (stages + 1);
  if (tokens.size() != needed)
    throw ParseError("tableau needs s*s entries for A and s for b", 0);
  std::vector<std::vector<Rational>> a(stages, std::vector<Rational>(stages));
  for (long i = 0; i < stages; ++i)
    for (long j = 0; j < stages; ++j) a[i][j] = parse_rational(tokens[next++]);
  std::vector<Rational> b(stages);
  for (long i = 0; i < stages; ++i) b[i] = parse_rational(tokens[next++]);
  return ButcherTableau(std::move(a), std::move(b));
}

namespace {

bool one_colored(const RootedTree& t) {
  if (t.color().index != 0) return false;
  for (const RootedTree& c : t.children())
    if (!one_colored(c)) return false;
  return true;
}

// d(t): per-stage derivative weights.
std::vector<Rational> stage_weights(const ButcherTableau& tab, const RootedTree& t) {
  const int s = tab.stages();
  std::vector<Rational> d(s, Rational(1));
  for (const RootedTree& branch : t.children()) {
    const std::vector<Rational> db = stage_weights(tab, branch);
    for (int i = 0; i < s; ++i) {
      Rational dot = 0;
      for (int j = 0; j < s; ++j) dot += tab.a(i, j) * db[j];
      d[i] *= dot;
    }
  }
  return d;
}

}  // namespace

Rational rk_elementary_weights(const ButcherTableau& tableau, const RootedTree& t) {
  if (!one_colored(t))
    throw std::invalid_argument("elementary weights take one-colour trees only");
  const std::vector<Rational> d = stage_weights(tableau, t);
  Rational total = 0;
  for (int i = 0; i < tableau.stages(); ++i) total += tableau.b(i) * d[i];
  return total;
}

CoefficientMap rk_coefficient_map(const ButcherTableau& tableau, int n,
                                  const EnumerationLimits& limits) {
  CoefficientMap out;
  out.set_empty(Rational(1));
  auto by_size = enumerate_rooted_upto(n, 1, limits);
  for (int m = 1; m <= n; ++m)
    for (const RootedTree& t : by_size[m])
      out.set(t, rk_elementary_weights(tableau, t));
  return out;
}

}  // namespace treelie
