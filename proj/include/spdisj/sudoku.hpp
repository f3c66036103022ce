#pragma once

// Sudoku matrices and their decomposition P = 1·A_1 + 2·A_2 + ... + n²·A_{n²}
// into pairwise disjoint S-permutation matrices.

#include "spdisj/numeric.hpp"
#include "spdisj/sperm.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace spdisj {

class SudokuGrid {
public:
    // cells is row-major, n⁴ entries. Throws InvalidInputError on a size
    // mismatch; entry ranges are checked by validate().
    SudokuGrid(int n, std::vector<int> cells);

    int order() const noexcept { return n_; }
    int size() const noexcept { return n_ * n_; }
    int at(int row, int col) const { return cells_[(row - 1) * size() + (col - 1)]; }  // 1-based
    const std::vector<int>& cells() const noexcept { return cells_; }

    bool operator==(const SudokuGrid&) const = default;

private:
    int n_;
    std::vector<int> cells_;
};

struct GridViolation {
    std::string group;  // "row", "column" or "block"
    int index = 0;      // 1-based; blocks numbered row-major
    int value = 0;      // the repeated value
    std::string describe() const;
};

// First repeated value in a row, column or block, if any. Throws
// InvalidInputError when an entry lies outside 1..n².
std::optional<GridViolation> find_violation(const SudokuGrid& p);
bool validate(const SudokuGrid& p);

struct DisjointFamily {
    int n = 0;
    std::vector<SPermMatrix> members;
};

bool is_pairwise_disjoint(const DisjointFamily& f);

// members[s-1] has its 1s exactly where p holds s. Throws InvalidInputError
// for an invalid grid.
DisjointFamily decompose(const SudokuGrid& p);

// sum of weights[i] * members[i]; weights default to 1..size. Throws
// InvalidInputError unless the members' ones partition every cell once.
SudokuGrid recompose(const DisjointFamily& f, const std::vector<int>& weights = {});

using GridSink = std::function<void(const SudokuGrid&)>;

struct SudokuCountOptions {
    std::optional<int> first_cell;  // restrict cell (1,1) to this value
    GridSink sink;                  // receives every completed grid
};

// Exhaustive backtracking with row/column/block candidate masks. Only n = 2
// is supported; larger n throws ScaleLimitError.
BigInt count_sudoku(int n, const SudokuCountOptions& options = {});

using CliqueSink = std::function<void(const std::vector<SPermMatrix>&)>;

// Cliques of size n² in the graph on Σ_{n²} whose edges join disjoint
// matrices. Only n = 2 is supported.
BigInt count_cliques(int n, const CliqueSink& sink = {});

// sigma / (n²)!. Throws InvalidInputError when the division is inexact.
BigInt z_from_sigma(const BigInt& sigma, int n);

// Number of 9×9 Sudoku matrices (Felgenhauer and Jarvis, 2005).
BigInt sudoku_count_order3();

// Reproducible randomness: std::mt19937_64 seeded with the 64-bit seed.
// uniform(m) draws x until x < 2^64 - (2^64 mod m) and returns x mod m.
// random_permutation(n) starts from 1..n and for i = n-1 down to 1 swaps
// positions i and uniform(i+1).
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t uniform(std::uint64_t bound);
    Permutation random_permutation(int n);

private:
    std::mt19937_64 engine_;
};

// Uniform element of Σ_{n²}: row_perms[0..n-1] then col_perms[0..n-1],
// each from random_permutation(n).
SPermMatrix random_s_permutation(int n, PortableRng& rng);

struct FamilySample {
    DisjointFamily family;
    int attempts = 0;  // 1 + restarts actually used
    bool complete() const { return static_cast<int>(family.members.size()) == family.n * family.n; }
};

// Greedy randomized growth. Each attempt draws uniform matrices and keeps
// the ones disjoint from every kept member; an attempt is abandoned as soon
// as no matrix of Σ_{n²} is disjoint from the current family. Returns the
// first complete family, or the largest partial family after 1 + max_restarts
// attempts. Requires n <= 3.
FamilySample sample_family(int n, std::uint64_t seed, int max_restarts);

// Text format: n on the first line, then n² lines of n² integers.
SudokuGrid read_grid(std::istream& in);
void write_grid(std::ostream& out, const SudokuGrid& p);

}  // namespace spdisj
