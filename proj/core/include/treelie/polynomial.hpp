#pragma once

#include <map>
#include <span>
#include <vector>

#include "treelie/rational.hpp"

namespace treelie {

// Exponent per variable; the vector length always equals nvars.
using Monomial = std::vector<unsigned>;

// Exact multivariate polynomial over a fixed number of variables. No zero
// coefficients are stored; equality is exact.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(int nvars, Monomial m, const Rational& c);

  int nvars() const { return nvars_; }
  bool zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  bool is_constant() const;
  int total_degree() const;  // 0 for the zero polynomial

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  Polynomial derivative(int var) const;
  Rational operator()(std::span<const Rational> point) const;

  bool operator==(const Polynomial& other) const = default;

 private:
  void check_same(const Polynomial& o) const;

  int nvars_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace treelie
