#include "treelie/poly_io.hpp"

#include <cctype>
#include <utility>

#include "treelie/errors.hpp"

namespace treelie {

namespace {

struct RawTerm {
  Rational coeff;
  std::vector<std::pair<int, unsigned>> powers;  // (1-based variable, exponent)
};

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse(int& max_var) {
    std::vector<RawTerm> terms;
    skip_space();
    if (pos_ == text_.size()) return terms;  // empty input is the zero polynomial
    Rational sign = 1;
    if (peek() == '-' || peek() == '+') {
      if (!digit_follows_sign()) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
    }
    while (true) {
      terms.push_back(parse_term(sign, max_var));
      skip_space();
      if (pos_ == text_.size()) break;
      if (peek() == '+')
        sign = 1;
      else if (peek() == '-')
        sign = -1;
      else
        throw ParseError("expected '+' or '-' between terms", pos_);
      ++pos_;
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool digit_follows_sign() const {
    return pos_ + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  long parse_digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected digits", pos_);
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("index too large", pos_);
      ++pos_;
    }
    return value;
  }

  Rational parse_signed_rational() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::pair<int, unsigned> parse_varpow(int& max_var) {
    if (peek() != 't') throw ParseError("expected variable t<k>", pos_);
    ++pos_;
    const int var = static_cast<int>(parse_digits());
    if (var < 1) throw ParseError("variable indices are 1-based", pos_);
    max_var = std::max(max_var, var);
    unsigned exp = 1;
    if (peek() == '^') {
      ++pos_;
      exp = static_cast<unsigned>(parse_digits());
    }
    return {var, exp};
  }

  RawTerm parse_term(const Rational& sign, int& max_var) {
    skip_space();
    RawTerm term{Rational(1), {}};
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) ||
        ((peek() == '-' || peek() == '+') && digit_follows_sign())) {
      term.coeff = parse_signed_rational();
      have_coeff = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
      } else if (peek() == 't') {
        throw ParseError("expected '*' between coefficient and variables", pos_);
      }
    }
    if (peek() == 't') {
      term.powers.push_back(parse_varpow(max_var));
      skip_space();
      while (peek() == '*') {
        ++pos_;
        skip_space();
        term.powers.push_back(parse_varpow(max_var));
        skip_space();
      }
    } else if (!have_coeff) {
      throw ParseError("expected a coefficient or a variable", pos_);
    }
    term.coeff *= sign;
    return term;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Polynomial build(const std::vector<RawTerm>& terms, int nvars) {
  Polynomial p(nvars);
  for (const RawTerm& term : terms) {
    Monomial m(nvars, 0);
    for (auto [var, exp] : term.powers) m[var - 1] += exp;
    p.add_term(m, term.coeff);
  }
  return p;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars) {
  int max_var = 0;
  std::vector<RawTerm> terms = PolyParser(text).parse(max_var);
  if (nvars < 0) nvars = max_var;
  if (max_var > nvars)
    throw ParseError("variable index exceeds the declared count", 0);
  return build(terms, nvars);
}

std::string format(const Polynomial& p) {
  if (p.zero()) return "0";
  std::string out;
  // Descending lexicographic monomial order.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    out += to_string(c);
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out += any ? "*" : " * ";
      any = true;
      out += "t" + std::to_string(i + 1);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

PolyVectorField parse_vector_field(std::string_view text, int nvars) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i < line.size() && line[i] != '#') lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("vector field needs at least one component", 0);
  const int dim = static_cast<int>(lines.size());
  if (nvars >= 0 && nvars != dim)
    throw ParseError("component count must equal variable count", 0);
  std::vector<Polynomial> components;
  components.reserve(lines.size());
  for (std::string_view line : lines) components.push_back(parse_polynomial(line, dim));
  return PolyVectorField(std::move(components));
}

std::string format(const PolyVectorField& f) {
  std::string out;
  for (const Polynomial& p : f.components()) out += format(p) + "\n";
  return out;
}

std::vector<Rational> parse_point(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece =
        comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_point(std::span<const Rational> point) {
  std::string out;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ",";
    out += to_string(point[i]);
  }
  return out;
}

}  // namespace treelie
