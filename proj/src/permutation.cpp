#include "spdisj/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace spdisj {

bool is_permutation_of(std::span<const int> values, int n) {
    if (static_cast<int>(values.size()) != n) return false;
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : values) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation identity_permutation(int n) {
    Permutation p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return p;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = identity_permutation(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace spdisj
