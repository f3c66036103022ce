#pragma once

// S-permutation matrices: n²×n² permutation matrices with exactly one 1 in
// each of the n² n×n blocks.
//
// Parameterization. Block (s,t), 1 ≤ s,t ≤ n, carries its single 1 at
// within-block row row_perms[s](t) and within-block column col_perms[t](s).
// Every tuple of 2n permutations gives a distinct matrix and every matrix
// arises this way, so |Σ| = (n!)^{2n}.
//
// Coordinates. The public API uses 1-based global (row, col). Masks use the
// 0-based bit index (row-1)·n² + (col-1), row-major.

#include "spdisj/errors.hpp"
#include "spdisj/numeric.hpp"
#include "spdisj/permutation.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace spdisj {

struct Cell {
    int row = 0;  // 1-based
    int col = 0;  // 1-based
    auto operator<=>(const Cell&) const = default;
};

// Thrown by build_matrix; index() is 0..n-1 for row_perms[i], n..2n-1 for
// col_perms[i-n].
class InvalidPermutationError : public InvalidInputError {
public:
    InvalidPermutationError(int index, const std::string& what)
        : InvalidInputError(what), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

class OnesMask {
public:
    OnesMask() = default;
    explicit OnesMask(int n);

    int order() const noexcept { return n_; }
    int bit_count() const noexcept { return n_ * n_ * n_ * n_; }
    int popcount() const noexcept;

    bool test(int bit) const noexcept { return (words_[bit >> 6] >> (bit & 63)) & 1U; }
    void set(int bit) noexcept { words_[bit >> 6] |= std::uint64_t{1} << (bit & 63); }

    bool test(Cell c) const noexcept { return test(bit_index(c)); }
    int bit_index(Cell c) const noexcept { return (c.row - 1) * n_ * n_ + (c.col - 1); }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    auto operator<=>(const OnesMask&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

class SPermMatrix {
public:
    int order() const noexcept { return n_; }
    int size() const noexcept { return n_ * n_; }

    const std::vector<Permutation>& row_perms() const noexcept { return row_perms_; }
    const std::vector<Permutation>& col_perms() const noexcept { return col_perms_; }

    // The global cell holding the 1 of block (s,t), both 1-based.
    Cell one_in_block(int s, int t) const;

    // All n² cells holding a 1, sorted by row.
    std::vector<Cell> ones() const;

    bool at(int row, int col) const;

    // Swaps the roles of row_perms and col_perms.
    SPermMatrix transposed() const;

    bool operator==(const SPermMatrix&) const = default;

private:
    friend SPermMatrix build_matrix(int, std::vector<Permutation>, std::vector<Permutation>);
    SPermMatrix() = default;

    int n_ = 0;
    std::vector<Permutation> row_perms_;
    std::vector<Permutation> col_perms_;
};

SPermMatrix build_matrix(int n, std::vector<Permutation> row_perms,
                         std::vector<Permutation> col_perms);

// Recovers the parameter tuple from the 1-positions. Throws InvalidInputError
// if the mask is not an S-permutation matrix.
SPermMatrix matrix_from_mask(const OnesMask& mask);

// (n!)^{2n}
BigInt sigma_size(int n);

struct EnumerationCap {
    int max_order = 3;
};

// Bytes held by enumerate_sigma(n): one SPermMatrix plus one OnesMask each.
BigInt projected_enumeration_bytes(int n);

// All of Σ_{n²}, lexicographic over the concatenated words
// row_perms[0..n-1], col_perms[0..n-1]. Throws ScaleLimitError above the cap.
std::vector<SPermMatrix> enumerate_sigma(int n, EnumerationCap cap = {});

OnesMask ones_mask(const SPermMatrix& a);

// True iff no cell holds a 1 in both. Throws std::invalid_argument when the
// block orders differ.
bool is_disjoint(const OnesMask& a, const OnesMask& b);

// Cell-level check: exactly n² ones, one per row, column and block. Reads
// only the mask, never a parameterization.
bool is_valid_s_permutation(const OnesMask& mask);

}  // namespace spdisj
