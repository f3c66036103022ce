#include "spdisj/sperm.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace spdisj;

namespace {

// Dense-matrix check built only from the listed 1-cells.
bool dense_is_s_permutation(int n, const std::vector<Cell>& ones) {
    const int m = n * n;
    std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
    for (auto c : ones) {
        if (c.row < 1 || c.row > m || c.col < 1 || c.col > m) return false;
        a[c.row - 1][c.col - 1] += 1;
    }
    for (int i = 0; i < m; ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < m; ++j) {
            row += a[i][j];
            col += a[j][i];
        }
        if (row != 1 || col != 1) return false;
    }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            int block = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) block += a[s * n + i][t * n + j];
            if (block != 1) return false;
        }
    return true;
}

bool cells_disjoint(const SPermMatrix& a, const SPermMatrix& b) {
    const auto x = a.ones();
    const auto y = b.ones();
    std::vector<Cell> common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    return common.empty();
}

std::vector<int> set_bits(const OnesMask& m) {
    std::vector<int> out;
    for (int b = 0; b < m.bit_count(); ++b)
        if (m.test(b)) out.push_back(b);
    return out;
}

const Permutation id2{1, 2};
const Permutation swap2{2, 1};

}  // namespace

TEST_CASE("identity parameters for n=2 place ones on the block-rule cells") {
    const auto a = build_matrix(2, {id2, id2}, {id2, id2});
    CHECK(a.ones() == std::vector<Cell>{{1, 1}, {2, 3}, {3, 2}, {4, 4}});
    CHECK(set_bits(ones_mask(a)) == std::vector<int>{0, 6, 9, 15});
    CHECK(a.at(2, 3));
    CHECK_FALSE(a.at(2, 2));
}

TEST_CASE("n=1 is the 1x1 matrix [1]") {
    const auto a = build_matrix(1, {{1}}, {{1}});
    CHECK(a.ones() == std::vector<Cell>{{1, 1}});
    CHECK(ones_mask(a).popcount() == 1);
    CHECK(set_bits(ones_mask(a)) == std::vector<int>{0});
}

TEST_CASE("invalid permutations are rejected with their index") {
    auto index_of = [](auto&& fn) {
        try {
            fn();
        } catch (const InvalidPermutationError& e) {
            return e.index();
        }
        return -1;
    };
    CHECK(index_of([] { build_matrix(2, {id2, {1, 1}}, {id2, id2}); }) == 1);
    CHECK(index_of([] { build_matrix(2, {id2, id2}, {{0, 1}, id2}); }) == 2);
    CHECK(index_of([] { build_matrix(2, {id2, id2}, {id2, {1, 3}}); }) == 3);
    CHECK(index_of([] { build_matrix(3, {{1, 2, 3}, {1, 2, 3}, {3, 2, 3}}, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}); }) == 2);
    CHECK_THROWS_AS(build_matrix(2, {id2}, {id2, id2}), InvalidInputError);
}

TEST_CASE("all 16 parameter tuples for n=2 give distinct valid matrices") {
    const auto perms = all_permutations(2);
    std::set<std::vector<Cell>> seen;
    for (const auto& a : perms)
        for (const auto& b : perms)
            for (const auto& c : perms)
                for (const auto& d : perms) {
                    const auto m = build_matrix(2, {a, b}, {c, d});
                    CHECK(dense_is_s_permutation(2, m.ones()));
                    seen.insert(m.ones());
                }
    CHECK(seen.size() == 16);
}

TEST_CASE("sigma_size is (n!)^(2n)") {
    CHECK(sigma_size(1) == 1);
    CHECK(sigma_size(2) == 16);
    CHECK(sigma_size(3) == 46656);
    CHECK(sigma_size(4) == BigInt("110075314176"));
}

TEST_CASE("enumerate_sigma sizes, distinctness and validity") {
    for (int n = 1; n <= 3; ++n) {
        const auto all = enumerate_sigma(n);
        CHECK(BigInt(all.size()) == sigma_size(n));
        std::set<OnesMask> masks;
        bool valid = true;
        for (const auto& a : all) {
            const auto m = ones_mask(a);
            valid = valid && is_valid_s_permutation(m) && m.popcount() == n * n;
            masks.insert(m);
        }
        CHECK(valid);
        CHECK(masks.size() == all.size());
    }
}

TEST_CASE("enumeration order is lexicographic over the concatenated permutation words") {
    const auto all = enumerate_sigma(2);
    auto word = [](const SPermMatrix& a) {
        std::vector<int> w;
        for (const auto& p : a.row_perms()) w.insert(w.end(), p.begin(), p.end());
        for (const auto& p : a.col_perms()) w.insert(w.end(), p.begin(), p.end());
        return w;
    };
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(word(all[i - 1]) < word(all[i]));
    CHECK(all.front() == build_matrix(2, {id2, id2}, {id2, id2}));
    CHECK(all.back() == build_matrix(2, {swap2, swap2}, {swap2, swap2}));
}

TEST_CASE("enumeration above the cap names the cardinality") {
    try {
        enumerate_sigma(4);
        FAIL("expected ScaleLimitError");
    } catch (const ScaleLimitError& e) {
        CHECK(std::string(e.what()).find("110075314176") != std::string::npos);
    }
    CHECK(enumerate_sigma(1, EnumerationCap{1}).size() == 1);
    CHECK_THROWS_AS(enumerate_sigma(2, EnumerationCap{1}), ScaleLimitError);
}

TEST_CASE("matrix_from_mask inverts ones_mask") {
    for (const auto& a : enumerate_sigma(3)) {
        if (!(matrix_from_mask(ones_mask(a)) == a)) {
            FAIL("round trip failed");
        }
    }
    OnesMask bad(2);
    bad.set(0);
    bad.set(1);
    bad.set(10);
    bad.set(15);
    CHECK_THROWS_AS(matrix_from_mask(bad), InvalidInputError);
}

TEST_CASE("is_disjoint basics") {
    const auto a = build_matrix(2, {id2, id2}, {id2, id2});
    const auto b = build_matrix(2, {swap2, swap2}, {swap2, swap2});
    CHECK_FALSE(is_disjoint(ones_mask(a), ones_mask(a)));
    // b holds its ones at (1,4), (2,2), (3,3), (4,1).
    CHECK(b.ones() == std::vector<Cell>{{1, 4}, {2, 2}, {3, 3}, {4, 1}});
    CHECK(cells_disjoint(a, b));
    CHECK(is_disjoint(ones_mask(a), ones_mask(b)));
    CHECK_THROWS_AS(is_disjoint(ones_mask(a), ones_mask(build_matrix(1, {{1}}, {{1}}))), std::invalid_argument);
}

TEST_CASE("is_disjoint agrees with the cell-level check, is symmetric and irreflexive on Sigma_4") {
    const auto all = enumerate_sigma(2);
    std::uint64_t ordered = 0;
    for (const auto& a : all) {
        CHECK_FALSE(is_disjoint(ones_mask(a), ones_mask(a)));
        for (const auto& b : all) {
            const bool d = is_disjoint(ones_mask(a), ones_mask(b));
            CHECK(d == is_disjoint(ones_mask(b), ones_mask(a)));
            CHECK(d == cells_disjoint(a, b));
            ordered += d ? 1 : 0;
        }
    }
    // Average number of disjoint partners: 144 / 16.
    // Cell-level count; the separate script over raw 0/1 matrices agrees.
    CHECK(ordered == 112);
    CHECK(ordered / all.size() == 7);
}

TEST_CASE("transposition stays inside Sigma") {
    for (int n = 2; n <= 3; ++n) {
        for (const auto& a : enumerate_sigma(n)) {
            const auto t = a.transposed();
            std::vector<Cell> flipped;
            for (auto c : a.ones()) flipped.push_back({c.col, c.row});
            std::sort(flipped.begin(), flipped.end());
            if (t.ones() != flipped || !is_valid_s_permutation(ones_mask(t))) FAIL("transpose mismatch");
        }
    }
}
