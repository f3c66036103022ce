#pragma once

// Brute-force census of disjoint pairs over all of Σ_{n²}: every pair of
// 1-position masks is ANDed word by word. Independent of the graph formula.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>

namespace spdisj {

enum class CensusMode {
    Unordered,  // scan i < j, ordered = 2 * unordered
    Ordered,    // scan all i != j, unordered = ordered / 2
};

struct CensusProgress {
    std::uint64_t rows_done = 0;
    std::uint64_t rows_total = 0;
};

struct CensusOptions {
    unsigned workers = 1;
    CensusMode mode = CensusMode::Unordered;
    int max_order = 3;
    // Zero disables progress reporting. The callback runs on the calling
    // thread.
    std::chrono::milliseconds progress_interval{0};
    std::function<void(const CensusProgress&)> on_progress;
};

struct CensusResult {
    int n = 0;
    std::uint64_t ordered_pairs = 0;
    std::uint64_t unordered_pairs = 0;
    std::uint64_t matrices_scanned = 0;
    std::chrono::nanoseconds elapsed{0};
};

// Throws ScaleLimitError above max_order, std::invalid_argument for zero
// workers.
CensusResult run_census(int n, const CensusOptions& options);
CensusResult run_census(int n, unsigned workers);

// Number of disjoint partners -> number of matrices with that many.
using DegreeHistogram = std::map<std::uint64_t, std::uint64_t>;
DegreeHistogram degree_histogram(int n, unsigned workers = 1, int max_order = 3);

}  // namespace spdisj
