// OpenMP versions of the reference kernels. Work is cut into contiguous
// chunks of the serial iteration order; "first witness" answers match the
// serial kernels exactly.

#include <omp.h>

#include <algorithm>
#include <atomic>

#include "aqmds/kernels.hpp"
#include "kernels_detail.hpp"

namespace aqmds::kernels::omp {

namespace {

// Chunks per thread for dynamic load balancing.
constexpr std::uint64_t kChunksPerThread = 8;
// Below this many items the serial loop wins.
constexpr std::uint64_t kParallelThreshold = 4096;

std::uint64_t chunk_count(std::uint64_t total) {
    const std::uint64_t want = static_cast<std::uint64_t>(omp_get_max_threads()) * kChunksPerThread;
    return std::max<std::uint64_t>(1, std::min(total, want));
}

}  // namespace

std::vector<std::uint64_t> weight_histogram(const CodewordSpace& space) {
    const std::uint64_t total = space.size();
    if (total < kParallelThreshold) return serial::weight_histogram(space);
    const int n = space.n();
    const std::uint64_t chunks = chunk_count(total);
    std::vector<std::uint64_t> hist(n + 1, 0);

#pragma omp parallel
    {
        std::vector<std::uint64_t> local(n + 1, 0);
        std::vector<int> digits(space.k());
        std::vector<std::uint8_t> word(n);
#pragma omp for schedule(dynamic)
        for (std::uint64_t c = 0; c < chunks; ++c) {
            const std::uint64_t begin = total / chunks * c + std::min(c, total % chunks);
            const std::uint64_t end = begin + total / chunks + (c < total % chunks ? 1 : 0);
            std::uint64_t t = begin;
            for (int r = 0; r < space.k(); ++r) {
                digits[r] = static_cast<int>(t % space.q());
                t /= space.q();
            }
            space.codeword_at(begin, word.data());
            for (std::uint64_t i = begin; i < end; ++i) {
                ++local[space.weight(word.data())];
                space.step(digits, word.data());
            }
        }
#pragma omp critical
        for (int w = 0; w <= n; ++w) hist[w] += local[w];
    }
    return hist;
}

int min_weight_outside(const CodewordSpace& space, const ParityFilter* exclude) {
    const std::uint64_t total = space.size();
    if (total < kParallelThreshold) return serial::min_weight_outside(space, exclude);
    const int n = space.n();
    const std::uint64_t chunks = chunk_count(total);
    std::atomic<int> best{n + 1};

#pragma omp parallel
    {
        std::vector<int> digits(space.k());
        std::vector<std::uint8_t> word(n);
#pragma omp for schedule(dynamic)
        for (std::uint64_t c = 0; c < chunks; ++c) {
            if (best.load(std::memory_order_relaxed) == 1) continue;
            const std::uint64_t begin = total / chunks * c + std::min(c, total % chunks);
            const std::uint64_t end = begin + total / chunks + (c < total % chunks ? 1 : 0);
            std::uint64_t t = begin;
            for (int r = 0; r < space.k(); ++r) {
                digits[r] = static_cast<int>(t % space.q());
                t /= space.q();
            }
            space.codeword_at(begin, word.data());
            int local = best.load(std::memory_order_relaxed);
            for (std::uint64_t i = begin; i < end && local > 1; ++i) {
                const int w = space.weight(word.data());
                if (w > 0 && w < local &&
                    (exclude == nullptr || !satisfies(space.field(), *exclude, n, word.data())))
                    local = w;
                space.step(digits, word.data());
            }
            int cur = best.load(std::memory_order_relaxed);
            while (local < cur && !best.compare_exchange_weak(cur, local)) {
            }
        }
    }
    return best.load();
}

FullWeightResult first_full_weight(const CodewordSpace& space, std::uint64_t max_candidates) {
    const std::uint64_t total = space.nonzero_size();
    const std::uint64_t limit = std::min(total, max_candidates);
    if (limit < kParallelThreshold) return serial::first_full_weight(space, max_candidates);
    const int n = space.n();
    const int threads = omp_get_max_threads();
    // Scan in rounds so an early witness stops the search.
    const std::uint64_t per_chunk = 1024;
    const std::uint64_t round = per_chunk * static_cast<std::uint64_t>(threads) * kChunksPerThread;

    FullWeightResult result;
    for (std::uint64_t start = 0; start < limit; start += round) {
        const std::uint64_t stop = std::min(limit, start + round);
        const std::uint64_t chunks = (stop - start + per_chunk - 1) / per_chunk;
        std::uint64_t first = kSaturated;
#pragma omp parallel
        {
            std::vector<int> digits;
            std::vector<std::uint8_t> word(n);
#pragma omp for schedule(static) reduction(min : first)
            for (std::uint64_t c = 0; c < chunks; ++c) {
                const std::uint64_t begin = start + c * per_chunk;
                const std::uint64_t end = std::min(stop, begin + per_chunk);
                space.nonzero_codeword_at(begin, digits, word.data());
                for (std::uint64_t s = begin; s < end; ++s) {
                    if (space.weight(word.data()) == n) {
                        first = std::min(first, s);
                        break;
                    }
                    space.nonzero_step(digits, word.data());
                }
            }
        }
        if (first != kSaturated) {
            std::vector<int> digits;
            std::vector<std::uint8_t> word(n);
            space.nonzero_codeword_at(first, digits, word.data());
            result.word = word;
            result.message = space.message_index(digits);
            return result;
        }
    }
    result.cap_hit = limit < total;
    return result;
}

std::optional<std::vector<int>> first_singular_subset(const gf::FiniteField& f, std::span<const std::uint8_t> m,
                                                      int rows, int cols) {
    if (rows > cols) return std::vector<int>{};
    const std::uint64_t total = binomial(cols, rows);
    if (total < kParallelThreshold / 8) return serial::first_singular_subset(f, m, rows, cols);
    const int threads = omp_get_max_threads();
    const std::uint64_t per_chunk = 256;
    const std::uint64_t round = per_chunk * static_cast<std::uint64_t>(threads) * kChunksPerThread;

    for (std::uint64_t start = 0; start < total; start += round) {
        const std::uint64_t stop = std::min(total, start + round);
        const std::uint64_t chunks = (stop - start + per_chunk - 1) / per_chunk;
        std::uint64_t first = kSaturated;
#pragma omp parallel
        {
            std::vector<std::uint8_t> scratch;
#pragma omp for schedule(static) reduction(min : first)
            for (std::uint64_t c = 0; c < chunks; ++c) {
                const std::uint64_t begin = start + c * per_chunk;
                const std::uint64_t end = std::min(stop, begin + per_chunk);
                std::vector<int> subset = unrank_combination(begin, cols, rows);
                for (std::uint64_t r = begin; r < end; ++r) {
                    if (detail::minor_singular(f, m, rows, cols, subset, scratch)) {
                        first = std::min(first, r);
                        break;
                    }
                    detail::next_combination(subset, cols);
                }
            }
        }
        if (first != kSaturated) return unrank_combination(first, cols, rows);
    }
    return std::nullopt;
}

SupportResult min_weight_by_support(const SupportQuery& query) {
    SupportResult result;
    const int threads = omp_get_max_threads();
    for (int w = 1; w <= query.n; ++w) {
        const std::uint64_t count = binomial(query.n, w);
        if (count > query.max_supports - std::min(query.max_supports, result.supports_examined)) {
            result.cap_hit = true;
            return result;
        }
        result.supports_examined += count;
        const std::uint64_t chunks = std::max<std::uint64_t>(
            1, std::min<std::uint64_t>(count, static_cast<std::uint64_t>(threads) * kChunksPerThread));
        std::atomic<bool> found{false};
#pragma omp parallel if (count >= 64)
        {
            std::vector<std::uint8_t> scratch, vec;
#pragma omp for schedule(dynamic)
            for (std::uint64_t c = 0; c < chunks; ++c) {
                if (found.load(std::memory_order_relaxed)) continue;
                const std::uint64_t begin = count / chunks * c + std::min(c, count % chunks);
                const std::uint64_t end = begin + count / chunks + (c < count % chunks ? 1 : 0);
                std::vector<int> support = unrank_combination(begin, query.n, w);
                for (std::uint64_t r = begin; r < end; ++r) {
                    if (found.load(std::memory_order_relaxed)) break;
                    if (detail::support_has_witness(query, support, scratch, vec)) {
                        found.store(true, std::memory_order_relaxed);
                        break;
                    }
                    detail::next_combination(support, query.n);
                }
            }
        }
        if (found.load()) {
            result.weight = w;
            return result;
        }
    }
    return result;
}

}  // namespace aqmds::kernels::omp
