#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "treelie/combination.hpp"
#include "treelie/errors.hpp"
#include "treelie/free_tree.hpp"

namespace treelie {

// Tree text grammar (whitespace-insensitive between tokens):
//   rooted := '(' color? rooted* ')'
//   color  := 'c' digits            (omitted colour means c0)
//   free   := 'free:' rooted
// Canonical printing emits children in stored order, omits 'c0' and inserts
// no whitespace; free trees serialize through their canonical representative.

using ParsedTree = std::variant<RootedTree, FreeTree>;

ParsedTree parse_tree(std::string_view text);
RootedTree parse_rooted(std::string_view text);  // rejects the free: form
FreeTree parse_free(std::string_view text);      // requires the free: form

std::string format(const RootedTree& t);
std::string format(const FreeTree& t);

// Combination text: one `<rational> <tree>` term per line; lines beginning
// with '#' are comments.
Combination<RootedTree> parse_rooted_combination(std::string_view text);
Combination<FreeTree> parse_free_combination(std::string_view text);
std::string format(const Combination<RootedTree>& x);
std::string format(const Combination<FreeTree>& x);

}  // namespace treelie
