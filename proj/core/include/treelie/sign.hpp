#pragma once

namespace treelie {

// Root-shift sign attached to a rooting of a free tree: zero exactly when
// the tree is superfluous, otherwise the parity of the shift count.
enum class Sign : int { minus = -1, zero = 0, plus = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(to_int(a) * to_int(b));
}

constexpr Sign parity_sign(int k) {
  return k % 2 == 0 ? Sign::plus : Sign::minus;
}

}  // namespace treelie
