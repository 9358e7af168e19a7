#include <algorithm>

#include "aqmds/error.hpp"
#include "aqmds/kernels.hpp"
#include "kernels_detail.hpp"

namespace aqmds::kernels {

std::uint64_t binomial(int n, int k) noexcept {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r >= kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) noexcept {
    unsigned __int128 r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r >= kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<int> unrank_combination(std::uint64_t rank, int n, int k) {
    std::vector<int> out;
    out.reserve(k);
    int c = 0;
    for (int i = 0; i < k; ++i) {
        for (;; ++c) {
            const std::uint64_t count = binomial(n - c - 1, k - i - 1);
            if (rank < count) break;
            rank -= count;
        }
        out.push_back(c++);
    }
    return out;
}

std::vector<int> rref_raw(const gf::FiniteField& f, std::uint8_t* data, int rows, int cols) {
    const int q = f.q();
    const auto add = f.add_table();
    const auto mul = f.mul_table();
    const auto neg = f.neg_table();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (data[i * cols + c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(data[piv * cols + j], data[r * cols + j]);
        const int inv = f.inv(gf::Element{data[r * cols + c]}).index;
        for (int j = 0; j < cols; ++j) data[r * cols + j] = mul[inv * q + data[r * cols + j]];
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const int factor = data[i * cols + c];
            if (factor == 0) continue;
            const int nf = neg[factor];
            for (int j = 0; j < cols; ++j) {
                const int t = mul[nf * q + data[r * cols + j]];
                data[i * cols + j] = add[data[i * cols + j] * q + t];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

CodewordSpace::CodewordSpace(const gf::FiniteField& f, int n, int k, std::span<const std::uint8_t> generator)
    : field_(&f), n_(n), k_(k), q_(f.q()) {
    if (generator.size() != static_cast<std::size_t>(n) * k)
        throw Error(Errc::dimension_mismatch, "generator size does not match k x n");
    size_ = saturating_pow(q_, k_);
    nonzero_size_ = saturating_pow(q_ - 1, k_);
    const auto mul = f.mul_table();
    const auto add = f.add_table();
    const auto neg = f.neg_table();
    multiple_.resize(static_cast<std::size_t>(k) * q_ * n);
    delta_.resize(multiple_.size());
    nonzero_wrap_.resize(static_cast<std::size_t>(k) * n);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < q_; ++c)
            for (int col = 0; col < n; ++col)
                multiple_[(static_cast<std::size_t>(r) * q_ + c) * n + col] = mul[c * q_ + generator[r * n + col]];
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < q_; ++c) {
            const int next = (c + 1) % q_;
            for (int col = 0; col < n; ++col) {
                const int hi = multiple_[(static_cast<std::size_t>(r) * q_ + next) * n + col];
                const int lo = multiple_[(static_cast<std::size_t>(r) * q_ + c) * n + col];
                delta_[(static_cast<std::size_t>(r) * q_ + c) * n + col] = add[hi * q_ + neg[lo]];
            }
        }
        for (int col = 0; col < n; ++col) {
            const int one = multiple_[(static_cast<std::size_t>(r) * q_ + 1) * n + col];
            const int top = multiple_[(static_cast<std::size_t>(r) * q_ + (q_ - 1)) * n + col];
            nonzero_wrap_[static_cast<std::size_t>(r) * n + col] = add[one * q_ + neg[top]];
        }
    }
}

void CodewordSpace::add_row(std::uint8_t* word, const std::uint8_t* row) const noexcept {
    const auto add = field_->add_table();
    for (int col = 0; col < n_; ++col) word[col] = add[word[col] * q_ + row[col]];
}

void CodewordSpace::codeword_at(std::uint64_t t, std::uint8_t* out) const {
    std::fill(out, out + n_, 0);
    for (int r = 0; r < k_; ++r) {
        const int digit = static_cast<int>(t % q_);
        t /= q_;
        add_row(out, &multiple_[(static_cast<std::size_t>(r) * q_ + digit) * n_]);
    }
}

void CodewordSpace::step(std::vector<int>& digits, std::uint8_t* word) const {
    for (int r = 0; r < k_; ++r) {
        const int d = digits[r];
        add_row(word, &delta_[(static_cast<std::size_t>(r) * q_ + d) * n_]);
        digits[r] = (d + 1) % q_;
        if (digits[r] != 0) return;
    }
}

void CodewordSpace::nonzero_codeword_at(std::uint64_t s, std::vector<int>& digits, std::uint8_t* out) const {
    std::fill(out, out + n_, 0);
    digits.assign(k_, 1);
    const int base = q_ - 1;
    for (int r = 0; r < k_; ++r) {
        const int digit = 1 + static_cast<int>(s % base);
        s /= base;
        digits[r] = digit;
        add_row(out, &multiple_[(static_cast<std::size_t>(r) * q_ + digit) * n_]);
    }
}

void CodewordSpace::nonzero_step(std::vector<int>& digits, std::uint8_t* word) const {
    for (int r = 0; r < k_; ++r) {
        const int d = digits[r];
        if (d + 1 < q_) {
            add_row(word, &delta_[(static_cast<std::size_t>(r) * q_ + d) * n_]);
            digits[r] = d + 1;
            return;
        }
        add_row(word, &nonzero_wrap_[static_cast<std::size_t>(r) * n_]);
        digits[r] = 1;
    }
}

std::uint64_t CodewordSpace::message_index(const std::vector<int>& digits) const noexcept {
    std::uint64_t t = 0;
    for (int r = k_ - 1; r >= 0; --r) t = t * q_ + digits[r];
    return t;
}

int CodewordSpace::weight(const std::uint8_t* word) const noexcept {
    int w = 0;
    for (int col = 0; col < n_; ++col) w += word[col] != 0;
    return w;
}

bool satisfies(const gf::FiniteField& f, const ParityFilter& filter, int n, const std::uint8_t* word) noexcept {
    const int q = f.q();
    const auto add = f.add_table();
    const auto mul = f.mul_table();
    for (int r = 0; r < filter.rows; ++r) {
        int acc = 0;
        const std::uint8_t* h = filter.h.data() + static_cast<std::size_t>(r) * n;
        for (int col = 0; col < n; ++col) acc = add[acc * q + mul[h[col] * q + word[col]]];
        if (acc != 0) return false;
    }
    return true;
}

namespace detail {

bool minor_singular(const gf::FiniteField& f, std::span<const std::uint8_t> m, int rows, int total_cols,
                    const std::vector<int>& cols, std::vector<std::uint8_t>& scratch) {
    const int k = static_cast<int>(cols.size());
    scratch.resize(static_cast<std::size_t>(rows) * k);
    for (int r = 0; r < rows; ++r)
        for (int j = 0; j < k; ++j) scratch[r * k + j] = m[static_cast<std::size_t>(r) * total_cols + cols[j]];
    return static_cast<int>(rref_raw(f, scratch.data(), rows, k).size()) < k;
}

bool support_has_witness(const SupportQuery& query, const std::vector<int>& support,
                         std::vector<std::uint8_t>& scratch, std::vector<std::uint8_t>& vec) {
    const gf::FiniteField& f = *query.field;
    const int w = static_cast<int>(support.size());
    const int n = query.n;
    scratch.resize(static_cast<std::size_t>(query.rows_c) * w);
    for (int r = 0; r < query.rows_c; ++r)
        for (int j = 0; j < w; ++j) scratch[r * w + j] = query.h_c[static_cast<std::size_t>(r) * n + support[j]];
    const std::vector<int> pivots = rref_raw(f, scratch.data(), query.rows_c, w);
    if (static_cast<int>(pivots.size()) == w) return false;
    if (query.d_is_zero) return true;

    const int q = f.q();
    const auto add = f.add_table();
    const auto mul = f.mul_table();
    const auto neg = f.neg_table();
    std::vector<bool> is_pivot(w, false);
    for (int c : pivots) is_pivot[c] = true;
    vec.resize(w);
    for (int fc = 0; fc < w; ++fc) {
        if (is_pivot[fc]) continue;
        std::fill(vec.begin(), vec.end(), 0);
        vec[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) vec[pivots[i]] = neg[scratch[i * w + fc]];
        for (int r = 0; r < query.rows_d; ++r) {
            int acc = 0;
            const std::uint8_t* h = query.h_d.data() + static_cast<std::size_t>(r) * n;
            for (int j = 0; j < w; ++j) acc = add[acc * q + mul[h[support[j]] * q + vec[j]]];
            if (acc != 0) return true;
        }
    }
    return false;
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

}  // namespace detail

}  // namespace aqmds::kernels
