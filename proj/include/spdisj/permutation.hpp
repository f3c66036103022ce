#pragma once

#include <span>
#include <vector>

namespace spdisj {

// A permutation of {1..n} in one-line notation: p[i-1] is the image of i.
using Permutation = std::vector<int>;

bool is_permutation_of(std::span<const int> values, int n);

Permutation identity_permutation(int n);

// All n! permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace spdisj
