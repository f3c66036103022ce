#pragma once

// Bipartite graphs with n row vertices and n column vertices, up to
// independent relabeling of each side. The two sides are never exchanged:
// a graph and its mirror image are different catalog entries.

#include "spdisj/permutation.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spdisj {

// Biadjacency matrix packed row-major with the (1,1) entry as the most
// significant of the n² bits, so integer order on bits() is lexicographic
// order on the bit string.
class Bigraph {
public:
    static constexpr int kMaxOrder = 8;

    Bigraph(int n, std::uint64_t bits);
    static Bigraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const noexcept { return n_; }
    std::uint64_t bits() const noexcept { return bits_; }
    int edge_count() const noexcept;

    // 1-based row r, column c.
    bool edge(int r, int c) const noexcept;

    // Neighbourhoods as n-bit words; index 1 is the most significant bit.
    std::uint32_t row_neighbours(int r) const noexcept;
    std::uint32_t col_neighbours(int c) const noexcept;

    // Edge (r,c) becomes (rows(r), cols(c)).
    Bigraph relabeled(const Permutation& rows, const Permutation& cols) const;

    auto operator<=>(const Bigraph&) const = default;

private:
    int n_;
    std::uint64_t bits_;
};

struct CanonicalCode {
    int n = 0;
    std::uint64_t value = 0;

    // Zero-padded lowercase hex of value, ceil(n²/4) digits.
    std::string hex() const;
    Bigraph graph() const { return Bigraph(n, value); }

    auto operator<=>(const CanonicalCode&) const = default;
};

struct GraphProfile {
    std::vector<int> psi;             // psi[i] = number of vertices of degree i, i = 0..n
    std::vector<int> class_multiset;  // sizes of neighbourhood classes, ascending

    bool operator==(const GraphProfile&) const = default;
};

struct CatalogEntry {
    CanonicalCode code;
    int edges = 0;
    GraphProfile profile;
    std::uint64_t labeled_count = 0;  // biadjacency matrices in this orbit
};

struct GraphCatalog {
    int n = 0;
    std::vector<std::vector<CatalogEntry>> buckets;  // buckets[k], k = 0..n²

    const std::vector<CatalogEntry>& bucket(int k) const;
    std::size_t total() const;
};

// Lexicographically smallest code over all row and column relabelings.
CanonicalCode canonicalize(const Bigraph& g);

GraphProfile profile(const Bigraph& g);

// Every isomorphism class of n+n bipartite graphs, bucketed by edge count,
// codes ascending within each bucket. Throws ScaleLimitError for n > max_order.
GraphCatalog enumerate_catalog(int n, int max_order = 4);

std::string to_dot(const Bigraph& g, const std::string& name);

}  // namespace spdisj
