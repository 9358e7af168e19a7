#pragma once

// Brute-force kernels behind the distance, weight and MDS oracles.
//
// Every kernel exists twice: `serial::` is the straightforward reference loop,
// `omp::` splits the same iteration space across OpenMP threads. Both return
// identical results (including "first in order" witnesses); the test suite
// checks this and bench/ compares their speed.
//
// Matrices are passed as row-major spans of element indices.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aqmds/gf.hpp"

namespace aqmds::kernels {

/// Sentinel returned by saturating counters.
inline constexpr std::uint64_t kSaturated = UINT64_MAX;

/// Binomial coefficient, saturating at kSaturated.
std::uint64_t binomial(int n, int k) noexcept;

/// base^exp, saturating at kSaturated.
std::uint64_t saturating_pow(std::uint64_t base, int exp) noexcept;

/// Lexicographic unranking of k-subsets of {0..n-1}.
std::vector<int> unrank_combination(std::uint64_t rank, int n, int k);

/// In-place reduced row echelon form of a rows x cols block; returns pivot columns.
std::vector<int> rref_raw(const gf::FiniteField& f, std::uint8_t* data, int rows, int cols);

/// Codeword enumeration over all q^k messages of a k x n generator. Message t
/// has base-q digits m_0 (fastest) .. m_{k-1}; its codeword is sum_i m_i * G_i.
class CodewordSpace {
public:
    CodewordSpace(const gf::FiniteField& f, int n, int k, std::span<const std::uint8_t> generator);

    const gf::FiniteField& field() const noexcept { return *field_; }
    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int q() const noexcept { return q_; }
    /// q^k, saturating.
    std::uint64_t size() const noexcept { return size_; }

    /// Writes the codeword of message index t into out[0..n).
    void codeword_at(std::uint64_t t, std::uint8_t* out) const;
    /// Advances (digits, word) to the next message; digits in [0, q).
    void step(std::vector<int>& digits, std::uint8_t* word) const;

    /// Same, restricted to messages whose digits are all nonzero. Candidate s
    /// maps to digits 1 + (base-(q-1) digits of s); the map preserves order.
    std::uint64_t nonzero_size() const noexcept { return nonzero_size_; }
    void nonzero_codeword_at(std::uint64_t s, std::vector<int>& digits, std::uint8_t* out) const;
    void nonzero_step(std::vector<int>& digits, std::uint8_t* word) const;

    /// Message digits -> index t.
    std::uint64_t message_index(const std::vector<int>& digits) const noexcept;

    int weight(const std::uint8_t* word) const noexcept;

private:
    void add_row(std::uint8_t* word, const std::uint8_t* row) const noexcept;

    const gf::FiniteField* field_;
    int n_, k_, q_;
    std::uint64_t size_, nonzero_size_;
    std::vector<std::uint8_t> multiple_;      // [(row*q + c)*n + col] = c * G[row][col]
    std::vector<std::uint8_t> delta_;         // [(row*q + c)*n + col] = (c+1 mod q)G - cG
    std::vector<std::uint8_t> nonzero_wrap_;  // [row*n + col] = 1*G - (q-1)*G
};

/// Membership test c in D via a parity-check matrix H_D (rows x n).
struct ParityFilter {
    std::span<const std::uint8_t> h;
    int rows = 0;
};

bool satisfies(const gf::FiniteField& f, const ParityFilter& filter, int n, const std::uint8_t* word) noexcept;

struct FullWeightResult {
    std::optional<std::vector<std::uint8_t>> word;
    std::optional<std::uint64_t> message;  // index t of the witness
    bool cap_hit = false;                  // stopped after max_candidates without a witness
};

/// Support enumeration: smallest w such that some w-subset S of coordinates
/// carries a codeword of C (parity check h_c) that is not in D (parity check
/// h_d; d_is_zero means D = {0}). Exact, independent of dim C.
struct SupportQuery {
    const gf::FiniteField* field = nullptr;
    int n = 0;
    std::span<const std::uint8_t> h_c;
    int rows_c = 0;
    std::span<const std::uint8_t> h_d;
    int rows_d = 0;
    bool d_is_zero = true;
    std::uint64_t max_supports = kSaturated;
};

struct SupportResult {
    std::optional<int> weight;  // empty when C \ D is empty
    std::uint64_t supports_examined = 0;
    bool cap_hit = false;
};

namespace serial {

std::vector<std::uint64_t> weight_histogram(const CodewordSpace& space);
/// Minimum weight over nonzero codewords outside D; n+1 if there are none.
int min_weight_outside(const CodewordSpace& space, const ParityFilter* exclude);
FullWeightResult first_full_weight(const CodewordSpace& space, std::uint64_t max_candidates);
std::optional<std::vector<int>> first_singular_subset(const gf::FiniteField& f, std::span<const std::uint8_t> m,
                                                      int rows, int cols);
SupportResult min_weight_by_support(const SupportQuery& query);

}  // namespace serial

namespace omp {

std::vector<std::uint64_t> weight_histogram(const CodewordSpace& space);
int min_weight_outside(const CodewordSpace& space, const ParityFilter* exclude);
FullWeightResult first_full_weight(const CodewordSpace& space, std::uint64_t max_candidates);
std::optional<std::vector<int>> first_singular_subset(const gf::FiniteField& f, std::span<const std::uint8_t> m,
                                                      int rows, int cols);
SupportResult min_weight_by_support(const SupportQuery& query);

}  // namespace omp

}  // namespace aqmds::kernels
