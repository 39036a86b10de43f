#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace treelie {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar used for every coefficient in the library.
// cpp_rational keeps values reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" (q > 0 after reduction). Throws ParseError.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" for integers.
std::string to_string(const Rational& value);

Integer factorial(int n);

}  // namespace treelie
