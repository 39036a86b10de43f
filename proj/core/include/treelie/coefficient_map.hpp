#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "treelie/enumerate.hpp"
#include "treelie/rooted_tree.hpp"

namespace treelie {

// The linear form α of a B-series: a coefficient for the empty tree plus a
// partial map on rooted trees. Trees absent from the map are *undefined*
// (distinct from zero); checkers fail loudly on undefined coefficients.
class CoefficientMap {
 public:
  CoefficientMap() = default;

  const Rational& empty_coefficient() const { return empty_; }
  void set_empty(const Rational& c) { empty_ = c; }

  void set(const RootedTree& t, const Rational& c) { terms_[t] = c; }
  std::optional<Rational> find(const RootedTree& t) const;
  // Throws std::out_of_range naming the tree when undefined.
  const Rational& at(const RootedTree& t) const;

  const std::map<RootedTree, Rational>& terms() const { return terms_; }
  bool defines(const RootedTree& t) const { return terms_.count(t) > 0; }

  // Smallest palette covering every colour that appears in a key.
  int color_count() const;
  // Every tree with <= n vertices (over color_count() colours) missing from
  // the map, in Murua order.
  std::vector<RootedTree> undefined_up_to(int n, const EnumerationLimits& limits = {}) const;

  // File format: one `<tree> <rational>` per line, `empty <rational>` for the
  // empty tree, '#' comments.
  static CoefficientMap parse(std::string_view text);
  std::string serialize() const;

 private:
  Rational empty_ = 0;
  std::map<RootedTree, Rational> terms_;
};

// Free-tree coefficients of Prop-3 form; superfluous keys are rejected since
// their rootings carry forced zero coefficients.
class FreeCoefficientMap {
 public:
  FreeCoefficientMap() = default;

  void set(const FreeTree& tau, const Rational& c);
  std::optional<Rational> find(const FreeTree& tau) const;
  const Rational& at(const FreeTree& tau) const;

  const std::map<FreeTree, Rational>& terms() const { return terms_; }

  int color_count() const;

  static FreeCoefficientMap parse(std::string_view text);
  std::string serialize() const;

 private:
  std::map<FreeTree, Rational> terms_;
};

}  // namespace treelie
