#pragma once

#include <map>

#include "treelie/rational.hpp"

namespace treelie {

// Finite formal sum of trees with exact rational coefficients. Zero
// coefficients are never stored; keys iterate in Murua order, which makes
// every traversal deterministic.
template <class Tree>
class Combination {
 public:
  Combination() = default;
  explicit Combination(const Tree& t, const Rational& c = Rational(1)) {
    add(t, c);
  }

  void add(const Tree& t, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const Combination& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [t, c] : other.terms_) add(t, c * scale);
  }

  Rational coefficient(const Tree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Tree, Rational>& terms() const { return terms_; }

  Combination& operator+=(const Combination& o) {
    add_scaled(o, Rational(1));
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    add_scaled(o, Rational(-1));
    return *this;
  }
  Combination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, c] : terms_) c *= s;
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }

  bool operator==(const Combination& other) const = default;

 private:
  std::map<Tree, Rational> terms_;
};

}  // namespace treelie
