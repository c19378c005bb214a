#pragma once

#include <array>
#include <vector>

namespace skb::detail {

/// Even permutations of 5 points in lexicographic order; index i is the
/// carrier label of the builtin a5 group.
std::vector<std::array<int, 5>> a5_permutations();

}  // namespace skb::detail
