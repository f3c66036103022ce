#include "spdisj/sudoku.hpp"

#include "spdisj/errors.hpp"

#include <bit>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace spdisj {

SudokuGrid::SudokuGrid(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
    if (n < 1) throw InvalidInputError("grid block order must be at least 1");
    const auto expected = static_cast<std::size_t>(n) * n * n * n;
    if (cells_.size() != expected)
        throw InvalidInputError("grid for n=" + std::to_string(n) + " needs " + std::to_string(expected) +
                                " cells, got " + std::to_string(cells_.size()));
}

std::string GridViolation::describe() const {
    return "value " + std::to_string(value) + " repeated in " + group + " " + std::to_string(index);
}

std::optional<GridViolation> find_violation(const SudokuGrid& p) {
    const int n = p.order();
    const int m = p.size();
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= m; ++c) {
            const int v = p.at(r, c);
            if (v < 1 || v > m)
                throw InvalidInputError("entry " + std::to_string(v) + " at (" + std::to_string(r) + "," +
                                        std::to_string(c) + ") is outside 1.." + std::to_string(m));
        }

    std::vector<std::uint64_t> rows(m), cols(m), blocks(m);
    for (int r = 1; r <= m; ++r) {
        for (int c = 1; c <= m; ++c) {
            const int v = p.at(r, c);
            const std::uint64_t bit = std::uint64_t{1} << (v - 1);
            const int b = ((r - 1) / n) * n + (c - 1) / n;
            if (rows[r - 1] & bit) return GridViolation{"row", r, v};
            if (cols[c - 1] & bit) return GridViolation{"column", c, v};
            if (blocks[b] & bit) return GridViolation{"block", b + 1, v};
            rows[r - 1] |= bit;
            cols[c - 1] |= bit;
            blocks[b] |= bit;
        }
    }
    return std::nullopt;
}

bool validate(const SudokuGrid& p) { return !find_violation(p).has_value(); }

bool is_pairwise_disjoint(const DisjointFamily& f) {
    std::vector<OnesMask> masks;
    for (const auto& a : f.members) masks.push_back(ones_mask(a));
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if (!is_disjoint(masks[i], masks[j])) return false;
    return true;
}

DisjointFamily decompose(const SudokuGrid& p) {
    if (auto v = find_violation(p)) throw InvalidInputError("not a Sudoku matrix: " + v->describe());
    const int n = p.order();
    const int m = p.size();
    std::vector<OnesMask> masks(m, OnesMask(n));
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= m; ++c) {
            auto& mask = masks[p.at(r, c) - 1];
            mask.set(mask.bit_index({r, c}));
        }
    DisjointFamily f;
    f.n = n;
    for (const auto& mask : masks) f.members.push_back(matrix_from_mask(mask));
    return f;
}

SudokuGrid recompose(const DisjointFamily& f, const std::vector<int>& weights) {
    const int n = f.n;
    const int m = n * n;
    if (static_cast<int>(f.members.size()) != m)
        throw InvalidInputError("family has " + std::to_string(f.members.size()) + " members, need " +
                                std::to_string(m));
    std::vector<int> w = weights;
    if (w.empty())
        for (int i = 1; i <= m; ++i) w.push_back(i);
    if (static_cast<int>(w.size()) != m) throw InvalidInputError("need one weight per member");

    std::vector<int> cells(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
        if (f.members[i].order() != n) throw InvalidInputError("member has a different block order");
        for (const Cell c : f.members[i].ones()) {
            int& slot = cells[(c.row - 1) * m + (c.col - 1)];
            if (slot != 0)
                throw InvalidInputError("members overlap at (" + std::to_string(c.row) + "," +
                                        std::to_string(c.col) + ")");
            slot = w[i];
        }
    }
    return SudokuGrid(n, std::move(cells));
}

namespace {

struct Backtracker {
    int n;
    int m;
    std::vector<std::uint32_t> rows, cols, blocks;
    std::vector<int> cells;
    const SudokuCountOptions& options;
    BigInt count = 0;

    Backtracker(int order, const SudokuCountOptions& opts)
        : n(order), m(order * order), rows(m), cols(m), blocks(m), cells(m * m, 0), options(opts) {}

    void fill(int idx) {
        if (idx == m * m) {
            ++count;
            if (options.sink) options.sink(SudokuGrid(n, cells));
            return;
        }
        const int r = idx / m, c = idx % m, b = (r / n) * n + c / n;
        std::uint32_t free = ~(rows[r] | cols[c] | blocks[b]) & ((1U << m) - 1);
        if (idx == 0 && options.first_cell) {
            const int v = *options.first_cell;
            free &= (v >= 1 && v <= m) ? (1U << (v - 1)) : 0U;
        }
        while (free) {
            const std::uint32_t bit = free & -free;
            free ^= bit;
            rows[r] |= bit;
            cols[c] |= bit;
            blocks[b] |= bit;
            cells[idx] = std::countr_zero(bit) + 1;
            fill(idx + 1);
            rows[r] ^= bit;
            cols[c] ^= bit;
            blocks[b] ^= bit;
        }
        cells[idx] = 0;
    }
};

}  // namespace

BigInt count_sudoku(int n, const SudokuCountOptions& options) {
    if (n != 2)
        throw ScaleLimitError("exhaustive Sudoku counting is limited to n=2; for n=3 the count is "
                              "known (about 6.671e21) and is not recomputed");
    Backtracker bt(n, options);
    bt.fill(0);
    return bt.count;
}

BigInt count_cliques(int n, const CliqueSink& sink) {
    if (n != 2)
        throw ScaleLimitError("clique counting in the disjointness graph is limited to n=2");
    const auto sigma = enumerate_sigma(n);
    const int v = static_cast<int>(sigma.size());
    const int target = n * n;
    std::vector<OnesMask> masks;
    for (const auto& a : sigma) masks.push_back(ones_mask(a));
    std::vector<std::uint32_t> adj(v, 0);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            if (i != j && is_disjoint(masks[i], masks[j])) adj[i] |= 1U << j;

    BigInt count = 0;
    std::vector<int> clique;
    // Candidates are restricted to larger indices so each clique is found once.
    auto extend = [&](auto&& self, std::uint32_t candidates) -> void {
        if (static_cast<int>(clique.size()) == target) {
            ++count;
            if (sink) {
                std::vector<SPermMatrix> members;
                for (int i : clique) members.push_back(sigma[i]);
                sink(members);
            }
            return;
        }
        while (candidates) {
            const int i = std::countr_zero(candidates);
            candidates &= candidates - 1;
            clique.push_back(i);
            self(self, candidates & adj[i]);
            clique.pop_back();
        }
    };
    extend(extend, v == 32 ? ~0U : (1U << v) - 1);
    return count;
}

BigInt z_from_sigma(const BigInt& sigma, int n) {
    if (n < 1) throw InvalidInputError("block order must be at least 1");
    const BigInt f = factorial(n * n);
    if (sigma < 0 || sigma % f != 0)
        throw InvalidInputError(sigma.str() + " is not divisible by (" + std::to_string(n * n) +
                                ")! = " + f.str());
    return sigma / f;
}

BigInt sudoku_count_order3() { return BigInt("6670903752021072936960"); }

std::uint64_t PortableRng::uniform(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform bound must be positive");
    // 2^64 mod bound, computed without overflow.
    const std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;  // accept x <= limit
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return x % bound;
}

Permutation PortableRng::random_permutation(int n) {
    Permutation p = identity_permutation(n);
    for (int i = n - 1; i >= 1; --i) std::swap(p[i], p[uniform(static_cast<std::uint64_t>(i) + 1)]);
    return p;
}

SPermMatrix random_s_permutation(int n, PortableRng& rng) {
    std::vector<Permutation> rho, sigma;
    for (int i = 0; i < n; ++i) rho.push_back(rng.random_permutation(n));
    for (int i = 0; i < n; ++i) sigma.push_back(rng.random_permutation(n));
    return build_matrix(n, std::move(rho), std::move(sigma));
}

FamilySample sample_family(int n, std::uint64_t seed, int max_restarts) {
    if (n < 1) throw std::invalid_argument("block order must be at least 1");
    if (max_restarts < 0) throw std::invalid_argument("max_restarts must be non-negative");
    std::vector<OnesMask> all;
    for (const auto& a : enumerate_sigma(n)) all.push_back(ones_mask(a));

    const int target = n * n;
    PortableRng rng(seed);
    FamilySample best;
    best.family.n = n;

    for (int attempt = 1; attempt <= max_restarts + 1; ++attempt) {
        DisjointFamily family{n, {}};
        std::vector<OnesMask> kept;
        // Matrices still disjoint from every kept member. The attempt is a
        // dead end once this is empty.
        std::vector<const OnesMask*> open;
        for (const auto& mask : all) open.push_back(&mask);

        while (static_cast<int>(family.members.size()) < target && !open.empty()) {
            SPermMatrix a = random_s_permutation(n, rng);
            const OnesMask mask = ones_mask(a);
            bool fits = true;
            for (const auto& k : kept)
                if (!is_disjoint(k, mask)) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            std::erase_if(open, [&](const OnesMask* o) { return !is_disjoint(*o, mask); });
            kept.push_back(mask);
            family.members.push_back(std::move(a));
        }

        if (family.members.size() > best.family.members.size()) best.family = std::move(family);
        best.attempts = attempt;
        if (best.complete()) break;
    }
    return best;
}

SudokuGrid read_grid(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n < 1) throw InvalidInputError("grid file: first line must hold the block order n");
    const int m = n * n;
    std::string line;
    std::getline(in, line);
    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(m) * m);
    for (int r = 1; r <= m; ++r) {
        if (!std::getline(in, line))
            throw InvalidInputError("grid file: expected " + std::to_string(m) + " rows, found " +
                                    std::to_string(r - 1));
        std::istringstream row(line);
        int v = 0, count = 0;
        while (row >> v) {
            cells.push_back(v);
            ++count;
        }
        if (!row.eof()) throw InvalidInputError("grid file: non-integer token in row " + std::to_string(r));
        if (count != m)
            throw InvalidInputError("grid file: row " + std::to_string(r) + " has " + std::to_string(count) +
                                    " entries, expected " + std::to_string(m));
    }
    return SudokuGrid(n, std::move(cells));
}

void write_grid(std::ostream& out, const SudokuGrid& p) {
    out << p.order() << '\n';
    for (int r = 1; r <= p.size(); ++r) {
        for (int c = 1; c <= p.size(); ++c) out << (c > 1 ? " " : "") << p.at(r, c);
        out << '\n';
    }
}

}  // namespace spdisj
