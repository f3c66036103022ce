#include "spdisj/census.hpp"

#include "spdisj/errors.hpp"
#include "spdisj/sperm.hpp"

#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace spdisj {

namespace {

constexpr std::size_t kBlockRows = 64;

// All masks of Σ_{n²}, `words` 64-bit words each, back to back.
struct PackedMasks {
    std::size_t count = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> data;

    const std::uint64_t* row(std::size_t i) const { return data.data() + i * words; }
};

PackedMasks pack_sigma(int n, int max_order) {
    const auto sigma = enumerate_sigma(n, EnumerationCap{max_order});
    PackedMasks packed;
    packed.count = sigma.size();
    packed.words = static_cast<std::size_t>((n * n * n * n + 63) / 64);
    packed.data.reserve(packed.count * packed.words);
    for (const auto& a : sigma) {
        const auto mask = ones_mask(a);
        packed.data.insert(packed.data.end(), mask.words().begin(), mask.words().end());
    }
    return packed;
}

template <std::size_t W>
inline bool masks_disjoint(const std::uint64_t* a, const std::uint64_t* b, std::size_t) {
    for (std::size_t w = 0; w < W; ++w)
        if (a[w] & b[w]) return false;
    return true;
}

template <>
inline bool masks_disjoint<0>(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w)
        if (a[w] & b[w]) return false;
    return true;
}

struct WorkerTally {
    std::uint64_t pairs = 0;
    std::vector<std::uint64_t> degree;  // empty unless a histogram is wanted
};

// Worker `id` takes blocks id, id + workers, id + 2*workers, ... of the outer
// index; interleaving keeps the triangular scan balanced.
template <std::size_t W, bool Ordered, bool Degrees>
void scan(const PackedMasks& m, unsigned id, unsigned workers, WorkerTally& tally,
          std::atomic<std::uint64_t>* rows_done) {
    const std::size_t count = m.count;
    const std::size_t blocks = (count + kBlockRows - 1) / kBlockRows;
    if constexpr (Degrees) tally.degree.assign(count, 0);
    for (std::size_t b = id; b < blocks; b += workers) {
        const std::size_t end = std::min(count, (b + 1) * kBlockRows);
        for (std::size_t i = b * kBlockRows; i < end; ++i) {
            const std::uint64_t* a = m.row(i);
            std::uint64_t local = 0;
            const std::size_t start = Ordered ? 0 : i + 1;
            for (std::size_t j = start; j < count; ++j) {
                if (masks_disjoint<W>(a, m.row(j), m.words)) {
                    ++local;
                    if constexpr (Degrees) {
                        if constexpr (!Ordered) ++tally.degree[j];
                    }
                }
            }
            tally.pairs += local;
            if constexpr (Degrees) tally.degree[i] += local;
        }
        if (rows_done) rows_done->fetch_add(end - b * kBlockRows, std::memory_order_relaxed);
    }
}

template <bool Ordered, bool Degrees>
void dispatch(const PackedMasks& m, unsigned id, unsigned workers, WorkerTally& tally,
              std::atomic<std::uint64_t>* rows_done) {
    switch (m.words) {
        case 1: scan<1, Ordered, Degrees>(m, id, workers, tally, rows_done); break;
        case 2: scan<2, Ordered, Degrees>(m, id, workers, tally, rows_done); break;
        default: scan<0, Ordered, Degrees>(m, id, workers, tally, rows_done); break;
    }
}

struct ScanOutput {
    std::uint64_t pairs = 0;
    std::vector<std::uint64_t> degree;
};

ScanOutput parallel_scan(const PackedMasks& m, unsigned workers, bool ordered, bool degrees,
                         const CensusOptions* progress) {
    std::vector<WorkerTally> tallies(workers);
    const bool report = progress && progress->on_progress && progress->progress_interval.count() > 0;
    std::atomic<std::uint64_t> rows_done{0};
    std::atomic<std::uint64_t>* counter = report ? &rows_done : nullptr;

    auto body = [&](unsigned id) {
        auto& t = tallies[id];
        if (ordered) {
            degrees ? dispatch<true, true>(m, id, workers, t, counter)
                    : dispatch<true, false>(m, id, workers, t, counter);
        } else {
            degrees ? dispatch<false, true>(m, id, workers, t, counter)
                    : dispatch<false, false>(m, id, workers, t, counter);
        }
    };

    if (workers == 1 && !report) {
        body(0);
    } else {
        std::atomic<unsigned> finished{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned id = 0; id < workers; ++id)
            pool.emplace_back([&, id] {
                body(id);
                finished.fetch_add(1, std::memory_order_release);
            });
        if (report) {
            while (finished.load(std::memory_order_acquire) < workers) {
                std::this_thread::sleep_for(progress->progress_interval);
                progress->on_progress({rows_done.load(std::memory_order_relaxed), m.count});
            }
        }
    }
    if (report) progress->on_progress({rows_done.load(), m.count});

    ScanOutput out;
    if (degrees) out.degree.assign(m.count, 0);
    for (const auto& t : tallies) {
        out.pairs += t.pairs;
        for (std::size_t i = 0; i < t.degree.size(); ++i) out.degree[i] += t.degree[i];
    }
    return out;
}

void check_request(int n, unsigned workers, int max_order) {
    if (n < 1) throw std::invalid_argument("block order must be at least 1");
    if (workers == 0) throw std::invalid_argument("worker count must be positive");
    if (n > max_order)
        throw ScaleLimitError("census for n=" + std::to_string(n) + " would scan " +
                              sigma_size(n).str() + " matrices pairwise (cap n <= " +
                              std::to_string(max_order) + ")");
}

}  // namespace

CensusResult run_census(int n, const CensusOptions& options) {
    check_request(n, options.workers, options.max_order);
    const auto start = std::chrono::steady_clock::now();
    const PackedMasks masks = pack_sigma(n, options.max_order);
    const bool ordered = options.mode == CensusMode::Ordered;
    const ScanOutput scanned = parallel_scan(masks, options.workers, ordered, false, &options);

    CensusResult r;
    r.n = n;
    r.matrices_scanned = masks.count;
    if (ordered) {
        if (scanned.pairs % 2 != 0)
            throw ConsistencyError("ordered census count is odd: " + std::to_string(scanned.pairs));
        r.ordered_pairs = scanned.pairs;
        r.unordered_pairs = scanned.pairs / 2;
    } else {
        r.unordered_pairs = scanned.pairs;
        r.ordered_pairs = 2 * scanned.pairs;
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

CensusResult run_census(int n, unsigned workers) {
    CensusOptions options;
    options.workers = workers;
    return run_census(n, options);
}

DegreeHistogram degree_histogram(int n, unsigned workers, int max_order) {
    check_request(n, workers, max_order);
    const PackedMasks masks = pack_sigma(n, max_order);
    const ScanOutput scanned = parallel_scan(masks, workers, false, true, nullptr);
    DegreeHistogram h;
    for (auto d : scanned.degree) ++h[d];
    return h;
}

}  // namespace spdisj
