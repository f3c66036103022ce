#include "spdisj/bigraph.hpp"

#include "spdisj/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spdisj {

namespace {

int bit_position(int n, int r, int c) { return n * n - 1 - ((r - 1) * n + (c - 1)); }

std::uint64_t full_mask(int n) {
    const int bits = n * n;
    return bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

Bigraph::Bigraph(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("bigraph side size must be 1..8");
    if (bits & ~full_mask(n)) throw std::invalid_argument("bigraph bits exceed n*n");
}

Bigraph Bigraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Bigraph g(n, 0);
    for (auto [r, c] : edges) {
        if (r < 1 || r > n || c < 1 || c > n) throw std::invalid_argument("edge endpoint out of range");
        g.bits_ |= std::uint64_t{1} << bit_position(n, r, c);
    }
    return g;
}

int Bigraph::edge_count() const noexcept { return std::popcount(bits_); }

bool Bigraph::edge(int r, int c) const noexcept { return (bits_ >> bit_position(n_, r, c)) & 1U; }

std::uint32_t Bigraph::row_neighbours(int r) const noexcept {
    return static_cast<std::uint32_t>((bits_ >> (n_ * (n_ - r))) & ((1U << n_) - 1));
}

std::uint32_t Bigraph::col_neighbours(int c) const noexcept {
    std::uint32_t out = 0;
    for (int r = 1; r <= n_; ++r) out = (out << 1) | (edge(r, c) ? 1U : 0U);
    return out;
}

Bigraph Bigraph::relabeled(const Permutation& rows, const Permutation& cols) const {
    if (!is_permutation_of(rows, n_) || !is_permutation_of(cols, n_))
        throw std::invalid_argument("relabeling is not a permutation pair");
    Bigraph out(n_, 0);
    for (int r = 1; r <= n_; ++r)
        for (int c = 1; c <= n_; ++c)
            if (edge(r, c)) out.bits_ |= std::uint64_t{1} << bit_position(n_, rows[r - 1], cols[c - 1]);
    return out;
}

std::string CanonicalCode::hex() const {
    const int digits = (n * n + 3) / 4;
    std::ostringstream os;
    os << std::hex;
    os.width(digits);
    os.fill('0');
    os << value;
    return os.str();
}

const std::vector<CatalogEntry>& GraphCatalog::bucket(int k) const {
    if (k < 0 || k >= static_cast<int>(buckets.size())) throw std::out_of_range("edge count out of range");
    return buckets[k];
}

std::size_t GraphCatalog::total() const {
    std::size_t t = 0;
    for (const auto& b : buckets) t += b.size();
    return t;
}

CanonicalCode canonicalize(const Bigraph& g) {
    const int n = g.order();
    std::vector<std::uint32_t> rows(n);
    for (int r = 1; r <= n; ++r) rows[r - 1] = g.row_neighbours(r);

    // For a fixed column relabeling the lexicographically smallest row
    // relabeling lists the row words in ascending order, so the minimum over
    // all (row, column) pairs is the minimum over column relabelings of the
    // sorted row words.
    std::uint64_t best = ~std::uint64_t{0};
    Permutation cols = identity_permutation(n);
    std::vector<std::uint32_t> moved(n);
    do {
        for (int r = 0; r < n; ++r) {
            std::uint32_t w = 0;
            for (int c = 1; c <= n; ++c)
                if ((rows[r] >> (n - c)) & 1U) w |= 1U << (n - cols[c - 1]);
            moved[r] = w;
        }
        std::sort(moved.begin(), moved.end());
        std::uint64_t code = 0;
        for (auto w : moved) code = (code << n) | w;
        best = std::min(best, code);
    } while (std::next_permutation(cols.begin(), cols.end()));
    return {n, best};
}

GraphProfile profile(const Bigraph& g) {
    const int n = g.order();
    GraphProfile p;
    p.psi.assign(static_cast<size_t>(n) + 1, 0);

    // Row and column neighbourhoods live on opposite sides, so a row vertex
    // is never equivalent to a column vertex; isolated vertices group with
    // their own side only.
    std::map<std::uint32_t, int> row_classes, col_classes;
    for (int v = 1; v <= n; ++v) {
        const auto rn = g.row_neighbours(v);
        const auto cn = g.col_neighbours(v);
        ++p.psi[std::popcount(rn)];
        ++p.psi[std::popcount(cn)];
        ++row_classes[rn];
        ++col_classes[cn];
    }
    for (const auto& [_, size] : row_classes) p.class_multiset.push_back(size);
    for (const auto& [_, size] : col_classes) p.class_multiset.push_back(size);
    std::sort(p.class_multiset.begin(), p.class_multiset.end());
    return p;
}

GraphCatalog enumerate_catalog(int n, int max_order) {
    if (n < 1) throw std::invalid_argument("side size must be at least 1");
    if (n > max_order || n > 5)
        throw ScaleLimitError("catalog for n=" + std::to_string(n) + " needs 2^" +
                              std::to_string(n * n) + " canonicalizations (cap n <= " +
                              std::to_string(std::min(max_order, 5)) + ")");

    std::map<std::uint64_t, std::uint64_t> orbit_sizes;
    const std::uint64_t count = std::uint64_t{1} << (n * n);
    for (std::uint64_t bits = 0; bits < count; ++bits) ++orbit_sizes[canonicalize(Bigraph(n, bits)).value];

    GraphCatalog cat;
    cat.n = n;
    cat.buckets.resize(static_cast<size_t>(n * n) + 1);
    for (const auto& [code, size] : orbit_sizes) {
        const Bigraph g(n, code);
        CatalogEntry e;
        e.code = {n, code};
        e.edges = g.edge_count();
        e.profile = profile(g);
        e.labeled_count = size;
        cat.buckets[e.edges].push_back(std::move(e));
    }
    return cat;
}

std::string to_dot(const Bigraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n  rankdir=LR;\n";
    os << "  subgraph cluster_R { label=\"R\";";
    for (int r = 1; r <= g.order(); ++r) os << " r" << r << ";";
    os << " }\n  subgraph cluster_C { label=\"C\";";
    for (int c = 1; c <= g.order(); ++c) os << " c" << c << " [shape=circle];";
    os << " }\n";
    for (int r = 1; r <= g.order(); ++r)
        for (int c = 1; c <= g.order(); ++c)
            if (g.edge(r, c)) os << "  r" << r << " -- c" << c << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace spdisj
