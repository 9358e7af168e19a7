// Reference implementations: one plain loop each, no parallelism.

#include <algorithm>

#include "aqmds/kernels.hpp"
#include "kernels_detail.hpp"

namespace aqmds::kernels::serial {

std::vector<std::uint64_t> weight_histogram(const CodewordSpace& space) {
    const int n = space.n();
    std::vector<std::uint64_t> hist(n + 1, 0);
    std::vector<int> digits(space.k(), 0);
    std::vector<std::uint8_t> word(n, 0);
    for (std::uint64_t t = 0; t < space.size(); ++t) {
        ++hist[space.weight(word.data())];
        space.step(digits, word.data());
    }
    return hist;
}

int min_weight_outside(const CodewordSpace& space, const ParityFilter* exclude) {
    const int n = space.n();
    int best = n + 1;
    std::vector<int> digits(space.k(), 0);
    std::vector<std::uint8_t> word(n, 0);
    for (std::uint64_t t = 0; t < space.size(); ++t) {
        const int w = space.weight(word.data());
        if (w > 0 && w < best && (exclude == nullptr || !satisfies(space.field(), *exclude, n, word.data()))) {
            best = w;
            if (best == 1) break;
        }
        space.step(digits, word.data());
    }
    return best;
}

FullWeightResult first_full_weight(const CodewordSpace& space, std::uint64_t max_candidates) {
    FullWeightResult result;
    const int n = space.n();
    const std::uint64_t total = space.nonzero_size();
    const std::uint64_t limit = std::min(total, max_candidates);
    std::vector<int> digits;
    std::vector<std::uint8_t> word(n);
    space.nonzero_codeword_at(0, digits, word.data());
    for (std::uint64_t s = 0; s < limit; ++s) {
        if (space.weight(word.data()) == n) {
            result.word = word;
            result.message = space.message_index(digits);
            return result;
        }
        space.nonzero_step(digits, word.data());
    }
    result.cap_hit = limit < total;
    return result;
}

std::optional<std::vector<int>> first_singular_subset(const gf::FiniteField& f, std::span<const std::uint8_t> m,
                                                      int rows, int cols) {
    if (rows > cols) return std::vector<int>{};
    std::vector<int> subset(rows);
    for (int i = 0; i < rows; ++i) subset[i] = i;
    std::vector<std::uint8_t> scratch;
    do {
        if (detail::minor_singular(f, m, rows, cols, subset, scratch)) return subset;
    } while (detail::next_combination(subset, cols));
    return std::nullopt;
}

SupportResult min_weight_by_support(const SupportQuery& query) {
    SupportResult result;
    std::vector<std::uint8_t> scratch, vec;
    for (int w = 1; w <= query.n; ++w) {
        const std::uint64_t count = binomial(query.n, w);
        if (count > query.max_supports - std::min(query.max_supports, result.supports_examined)) {
            result.cap_hit = true;
            return result;
        }
        result.supports_examined += count;
        std::vector<int> support(w);
        for (int i = 0; i < w; ++i) support[i] = i;
        do {
            if (detail::support_has_witness(query, support, scratch, vec)) {
                result.weight = w;
                return result;
            }
        } while (detail::next_combination(support, query.n));
    }
    return result;
}

}  // namespace aqmds::kernels::serial
