#pragma once

#include <compare>

namespace treelie {

// Vertex colour; colours are totally ordered by index. Index 0 is the
// default colour and is omitted by the serializer.
struct Color {
  int index = 0;

  auto operator<=>(const Color&) const = default;
};

}  // namespace treelie
