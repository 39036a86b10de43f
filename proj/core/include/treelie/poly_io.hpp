#pragma once

#include <string>
#include <string_view>

#include "treelie/errors.hpp"
#include "treelie/vector_field.hpp"

namespace treelie {

// Polynomial text: sum of monomials `coeff * t1^e1*t2^e2...`, variables are
// t1..tn (1-based), exponent 1 may be omitted, a bare rational is a constant
// term. Example: `1 * t1^2*t2 + -1/2 * t2^3`.
//
// nvars < 0 infers the variable count from the largest index present.
Polynomial parse_polynomial(std::string_view text, int nvars = -1);
std::string format(const Polynomial& p);

// Vector field text: one component polynomial per line.
PolyVectorField parse_vector_field(std::string_view text, int nvars = -1);
std::string format(const PolyVectorField& f);

// Point text: comma-separated rationals.
std::vector<Rational> parse_point(std::string_view text);
std::string format_point(std::span<const Rational> point);

}  // namespace treelie
