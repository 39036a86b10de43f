#include "treelie/coefficient_map.hpp"

#include <cctype>
#include <stdexcept>

#include "treelie/tree_io.hpp"

namespace treelie {

namespace {

int max_color_index(const RootedTree& t) {
  int index = t.color().index;
  for (const RootedTree& c : t.children())
    index = std::max(index, max_color_index(c));
  return index;
}

// Shared line-oriented reader: calls sink(tree_text, rational) per entry.
template <class Sink>
void read_lines(std::string_view text, Sink&& sink) {
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i < line.size() && line[i] != '#') {
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      std::string_view key = line.substr(i, j - i);
      Rational value;
      try {
        value = parse_rational(line.substr(j));
      } catch (const ParseError&) {
        throw ParseError("bad coefficient value", line_start + j);
      }
      sink(key, value, line_start + i);
    }
    line_start = line_end + 1;
  }
}

}  // namespace

std::optional<Rational> CoefficientMap::find(const RootedTree& t) const {
  auto it = terms_.find(t);
  if (it == terms_.end()) return std::nullopt;
  return it->second;
}

const Rational& CoefficientMap::at(const RootedTree& t) const {
  auto it = terms_.find(t);
  if (it == terms_.end())
    throw std::out_of_range("undefined coefficient for tree " + format(t));
  return it->second;
}

int CoefficientMap::color_count() const {
  int max_index = 0;
  for (const auto& [t, c] : terms_) max_index = std::max(max_index, max_color_index(t));
  return max_index + 1;
}

std::vector<RootedTree> CoefficientMap::undefined_up_to(
    int n, const EnumerationLimits& limits) const {
  std::vector<RootedTree> missing;
  auto by_size = enumerate_rooted_upto(n, color_count(), limits);
  for (int m = 1; m <= n; ++m)
    for (const RootedTree& t : by_size[m])
      if (!defines(t)) missing.push_back(t);
  return missing;
}

CoefficientMap CoefficientMap::parse(std::string_view text) {
  CoefficientMap out;
  read_lines(text, [&](std::string_view key, const Rational& value, std::size_t pos) {
    if (key == "empty") {
      out.set_empty(value);
      return;
    }
    try {
      out.set(parse_rooted(key), value);
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad tree in coefficient file: ") + e.what(), pos);
    }
  });
  return out;
}

std::string CoefficientMap::serialize() const {
  std::string out = "empty " + to_string(empty_) + "\n";
  for (const auto& [t, c] : terms_) out += format(t) + " " + to_string(c) + "\n";
  return out;
}

void FreeCoefficientMap::set(const FreeTree& tau, const Rational& c) {
  if (tau.superfluous())
    throw std::invalid_argument("free coefficient map rejects superfluous tree " +
                                format(tau));
  terms_[tau] = c;
}

std::optional<Rational> FreeCoefficientMap::find(const FreeTree& tau) const {
  auto it = terms_.find(tau);
  if (it == terms_.end()) return std::nullopt;
  return it->second;
}

const Rational& FreeCoefficientMap::at(const FreeTree& tau) const {
  auto it = terms_.find(tau);
  if (it == terms_.end())
    throw std::out_of_range("undefined coefficient for tree " + format(tau));
  return it->second;
}

int FreeCoefficientMap::color_count() const {
  int max_index = 0;
  for (const auto& [tau, c] : terms_)
    max_index = std::max(max_index, max_color_index(tau.representative()));
  return max_index + 1;
}

FreeCoefficientMap FreeCoefficientMap::parse(std::string_view text) {
  FreeCoefficientMap out;
  read_lines(text, [&](std::string_view key, const Rational& value, std::size_t pos) {
    try {
      out.set(parse_free(key), value);
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad tree in coefficient file: ") + e.what(), pos);
    }
  });
  return out;
}

std::string FreeCoefficientMap::serialize() const {
  std::string out;
  for (const auto& [tau, c] : terms_) out += format(tau) + " " + to_string(c) + "\n";
  return out;
}

}  // namespace treelie
