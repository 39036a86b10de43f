#include "treelie/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "treelie/errors.hpp"

namespace treelie {

namespace {

Integer parse_integer(std::string_view text, std::size_t& pos) {
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw ParseError("expected integer", pos);
  Integer value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  Integer num = parse_integer(text, pos);
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = parse_integer(text, pos);
    if (den == 0) throw ParseError("zero denominator", pos);
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing characters after rational", pos);
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace treelie
