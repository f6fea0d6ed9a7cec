#pragma once

#include <span>

namespace ehrhart {

struct InvariantPair {
  int f0;
  int b2;
  friend bool operator==(const InvariantPair&, const InvariantPair&) = default;
};

/// Every (f0, b2) pair realized by a smooth polytope of dimension 4
/// (20 pairs, 124 polytopes) or 5 (29 pairs, 866 polytopes). Empty for
/// other dimensions.
std::span<const InvariantPair> smooth_invariant_pairs(int d);

bool is_listed_pair(int d, int f0, int b2);

}  // namespace ehrhart
