#include "treelie/tree_io.hpp"

#include <cctype>
#include <sstream>

namespace treelie {

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  ParsedTree parse() {
    skip_space();
    bool free_form = false;
    if (text_.substr(pos_).starts_with("free:")) {
      free_form = true;
      pos_ += 5;
    }
    RootedTree t = parse_rooted();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
    if (free_form) return FreeTree(t);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  RootedTree parse_rooted() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '(')
      throw ParseError("expected '('", pos_);
    ++pos_;
    Color color{};
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == 'c') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected colour index after 'c'", pos_);
      long index = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = index * 10 + (text_[pos_] - '0');
        if (index > 1'000'000) throw ParseError("colour index too large", pos_);
        ++pos_;
      }
      color.index = static_cast<int>(index);
    }
    std::vector<RootedTree> children;
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '(') {
      children.push_back(parse_rooted());
      skip_space();
    }
    if (pos_ >= text_.size() || text_[pos_] != ')')
      throw ParseError("expected ')'", pos_);
    ++pos_;
    return RootedTree(color, std::move(children));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void format_rooted(const RootedTree& t, std::string& out) {
  out += '(';
  if (t.color().index != 0) {
    out += 'c';
    out += std::to_string(t.color().index);
  }
  for (const RootedTree& c : t.children()) format_rooted(c, out);
  out += ')';
}

template <class Tree>
Combination<Tree> parse_combination_lines(std::string_view text,
                                          Tree (*parse_one)(std::string_view)) {
  Combination<Tree> out;
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
      Rational coeff;
      try {
        coeff = parse_rational(line.substr(i, j - i));
      } catch (const ParseError& e) {
        throw ParseError("bad coefficient in combination line", line_start + i);
      }
      out.add(parse_one(line.substr(j)), coeff);
    }
    line_start = line_end + 1;
  }
  return out;
}

template <class Tree>
std::string format_combination(const Combination<Tree>& x) {
  std::string out;
  for (const auto& [t, c] : x.terms()) {
    out += to_string(c);
    out += ' ';
    out += format(t);
    out += '\n';
  }
  return out;
}

}  // namespace

ParsedTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

RootedTree parse_rooted(std::string_view text) {
  ParsedTree t = parse_tree(text);
  if (!std::holds_alternative<RootedTree>(t))
    throw ParseError("expected a rooted tree, got a free tree", 0);
  return std::get<RootedTree>(std::move(t));
}

FreeTree parse_free(std::string_view text) {
  ParsedTree t = parse_tree(text);
  if (!std::holds_alternative<FreeTree>(t))
    throw ParseError("expected a free tree (free:...)", 0);
  return std::get<FreeTree>(std::move(t));
}

std::string format(const RootedTree& t) {
  std::string out;
  format_rooted(t, out);
  return out;
}

std::string format(const FreeTree& t) { return "free:" + format(t.representative()); }

Combination<RootedTree> parse_rooted_combination(std::string_view text) {
  return parse_combination_lines<RootedTree>(text, &parse_rooted);
}

Combination<FreeTree> parse_free_combination(std::string_view text) {
  return parse_combination_lines<FreeTree>(text, &parse_free);
}

std::string format(const Combination<RootedTree>& x) { return format_combination(x); }
std::string format(const Combination<FreeTree>& x) { return format_combination(x); }

}  // namespace treelie
