#include "spdisj/sperm.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace spdisj {

OnesMask::OnesMask(int n) : n_(n), words_(static_cast<size_t>((n * n * n * n + 63) / 64), 0) {}

int OnesMask::popcount() const noexcept {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

Cell SPermMatrix::one_in_block(int s, int t) const {
    const int r = row_perms_[s - 1][t - 1];
    const int c = col_perms_[t - 1][s - 1];
    return {(s - 1) * n_ + r, (t - 1) * n_ + c};
}

std::vector<Cell> SPermMatrix::ones() const {
    std::vector<Cell> cells;
    cells.reserve(static_cast<size_t>(size()));
    for (int s = 1; s <= n_; ++s)
        for (int t = 1; t <= n_; ++t) cells.push_back(one_in_block(s, t));
    std::sort(cells.begin(), cells.end());
    return cells;
}

bool SPermMatrix::at(int row, int col) const {
    if (row < 1 || row > size() || col < 1 || col > size())
        throw std::out_of_range("cell outside the matrix");
    const int s = (row - 1) / n_ + 1;
    const int t = (col - 1) / n_ + 1;
    return one_in_block(s, t) == Cell{row, col};
}

SPermMatrix SPermMatrix::transposed() const {
    SPermMatrix out;
    out.n_ = n_;
    out.row_perms_ = col_perms_;
    out.col_perms_ = row_perms_;
    return out;
}

SPermMatrix build_matrix(int n, std::vector<Permutation> row_perms,
                         std::vector<Permutation> col_perms) {
    if (n < 1) throw InvalidInputError("block order must be at least 1");
    if (static_cast<int>(row_perms.size()) != n || static_cast<int>(col_perms.size()) != n)
        throw InvalidInputError("expected " + std::to_string(n) + " row and " +
                                std::to_string(n) + " column permutations");
    for (int i = 0; i < n; ++i) {
        if (!is_permutation_of(row_perms[i], n))
            throw InvalidPermutationError(
                i, "row_perms[" + std::to_string(i) + "] is not a permutation of 1.." +
                       std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
        if (!is_permutation_of(col_perms[i], n))
            throw InvalidPermutationError(
                n + i, "col_perms[" + std::to_string(i) + "] is not a permutation of 1.." +
                           std::to_string(n));
    }
    SPermMatrix m;
    m.n_ = n;
    m.row_perms_ = std::move(row_perms);
    m.col_perms_ = std::move(col_perms);
    return m;
}

bool is_valid_s_permutation(const OnesMask& mask) {
    const int n = mask.order();
    const int m = n * n;
    if (n < 1 || mask.popcount() != m) return false;
    std::vector<int> rows(m, 0), cols(m, 0), blocks(m, 0);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            if (!mask.test(r * m + c)) continue;
            ++rows[r];
            ++cols[c];
            ++blocks[(r / n) * n + c / n];
        }
    }
    auto all_one = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int x) { return x == 1; });
    };
    return all_one(rows) && all_one(cols) && all_one(blocks);
}

SPermMatrix matrix_from_mask(const OnesMask& mask) {
    if (!is_valid_s_permutation(mask))
        throw InvalidInputError("mask is not an S-permutation matrix");
    const int n = mask.order();
    const int m = n * n;
    std::vector<Permutation> rho(n, Permutation(n)), sigma(n, Permutation(n));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            if (!mask.test(r * m + c)) continue;
            const int s = r / n, t = c / n;
            rho[s][t] = r % n + 1;
            sigma[t][s] = c % n + 1;
        }
    }
    // Row/column uniqueness makes these permutations; build_matrix rechecks.
    return build_matrix(n, std::move(rho), std::move(sigma));
}

BigInt sigma_size(int n) {
    if (n < 1) throw std::invalid_argument("block order must be at least 1");
    return boost::multiprecision::pow(factorial(n), static_cast<unsigned>(2 * n));
}

BigInt projected_enumeration_bytes(int n) {
    const BigInt words = (n * n * n * n + 63) / 64;
    const BigInt per_matrix = sizeof(SPermMatrix) + 2 * n * (sizeof(Permutation) + n * sizeof(int)) +
                              sizeof(OnesMask) + words * 8;
    return sigma_size(n) * per_matrix;
}

std::vector<SPermMatrix> enumerate_sigma(int n, EnumerationCap cap) {
    if (n < 1) throw std::invalid_argument("block order must be at least 1");
    if (n > cap.max_order)
        throw ScaleLimitError("enumerating Sigma for n=" + std::to_string(n) + " would produce " +
                              sigma_size(n).str() + " matrices (cap n <= " +
                              std::to_string(cap.max_order) + ")");

    const auto perms = all_permutations(n);
    const int slots = 2 * n;
    const size_t base = perms.size();
    std::vector<size_t> digit(static_cast<size_t>(slots), 0);

    std::vector<SPermMatrix> out;
    out.reserve(static_cast<size_t>(sigma_size(n)));
    while (true) {
        std::vector<Permutation> rho, sigma;
        for (int i = 0; i < n; ++i) rho.push_back(perms[digit[i]]);
        for (int i = n; i < slots; ++i) sigma.push_back(perms[digit[i]]);
        out.push_back(build_matrix(n, std::move(rho), std::move(sigma)));

        // Odometer with the last column permutation fastest.
        int pos = slots - 1;
        while (pos >= 0 && ++digit[pos] == base) digit[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

OnesMask ones_mask(const SPermMatrix& a) {
    OnesMask mask(a.order());
    for (int s = 1; s <= a.order(); ++s)
        for (int t = 1; t <= a.order(); ++t) mask.set(mask.bit_index(a.one_in_block(s, t)));
    return mask;
}

bool is_disjoint(const OnesMask& a, const OnesMask& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("is_disjoint: masks have different block orders");
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (size_t i = 0; i < wa.size(); ++i)
        if (wa[i] & wb[i]) return false;
    return true;
}

}  // namespace spdisj
