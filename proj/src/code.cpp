#include "aqmds/code.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "aqmds/error.hpp"
#include "aqmds/kernels.hpp"

namespace aqmds::code {

namespace {

constexpr std::uint64_t kDefaultCap = 10'000'000;

void require_compatible(const LinearCode& a, const LinearCode& b) {
    if (!(a.field() == b.field()))
        throw Error(Errc::field_mismatch, "codes over GF(" + std::to_string(a.field().q()) + ") and GF(" +
                                              std::to_string(b.field().q()) + ")");
    if (a.n() != b.n())
        throw Error(Errc::length_mismatch,
                    "codes of length " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
}

std::uint64_t support_cost(int n, int k) {
    const int redundancy = n - k;
    unsigned __int128 total = 0;
    for (int w = 1; w <= std::min(n, n - k + 1); ++w) {
        total += static_cast<unsigned __int128>(kernels::binomial(n, w)) * (redundancy * w * w + w + 1);
        if (total >= kernels::kSaturated) return kernels::kSaturated;
    }
    return static_cast<std::uint64_t>(total);
}

DistanceMethod resolve(const LinearCode& c, const EnumOptions& opts) {
    if (opts.method != DistanceMethod::automatic) return opts.method;
    const std::uint64_t words = kernels::saturating_pow(c.field().q(), c.k());
    const std::uint64_t enum_cost =
        words == kernels::kSaturated ? kernels::kSaturated : words * static_cast<std::uint64_t>(c.n());
    if (words <= opts.cap && enum_cost <= support_cost(c.n(), c.k())) return DistanceMethod::enumerate;
    return DistanceMethod::support;
}

void require_enumerable(const LinearCode& c, std::uint64_t cap) {
    const std::uint64_t words = kernels::saturating_pow(c.field().q(), c.k());
    if (words > cap)
        throw Error(Errc::cap_exceeded, c.to_string() + " has " + std::to_string(c.field().q()) + "^" +
                                            std::to_string(c.k()) + " codewords, above the enumeration cap " +
                                            std::to_string(cap) +
                                            "; use is_mds or the support method, or raise AQMDS_MAX_ENUM");
}

kernels::CodewordSpace space_of(const LinearCode& c, const std::vector<std::uint8_t>& raw) {
    return kernels::CodewordSpace(c.field(), c.n(), c.k(), raw);
}

int support_weight(const LinearCode& c, const LinearCode* d, std::uint64_t cap) {
    const std::vector<std::uint8_t> hc = c.parity_check().raw();
    std::vector<std::uint8_t> hd;
    kernels::SupportQuery query;
    query.field = &c.field();
    query.n = c.n();
    query.h_c = hc;
    query.rows_c = c.n() - c.k();
    query.d_is_zero = d == nullptr || d->k() == 0;
    if (!query.d_is_zero) {
        hd = d->parity_check().raw();
        query.h_d = hd;
        query.rows_d = d->n() - d->k();
    }
    query.max_supports = cap;
    const kernels::SupportResult r = kernels::omp::min_weight_by_support(query);
    if (r.cap_hit)
        throw Error(Errc::cap_exceeded, "support enumeration for " + c.to_string() + " exceeded " +
                                            std::to_string(cap) + " coordinate subsets");
    return r.weight.value_or(c.n() + 1);
}

}  // namespace

std::uint64_t default_enumeration_cap() {
    if (const char* env = std::getenv("AQMDS_MAX_ENUM")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultCap;
}

LinearCode::LinearCode(GfMatrix g, GfMatrix h)
    : g_(std::move(g)), h_(std::move(h)), n_(static_cast<int>(g_.cols())), k_(static_cast<int>(g_.rows())) {}

LinearCode LinearCode::from_generator(const GfMatrix& m) {
    auto [reduced, pivots] = linalg::rref(m);
    if (pivots.empty()) throw Error(Errc::zero_code, "generator matrix has rank 0");
    GfMatrix g = reduced.take_rows(pivots.size());
    GfMatrix h = linalg::nullspace(g);
    return LinearCode(std::move(g), std::move(h));
}

LinearCode LinearCode::zero(FieldPtr field, int n) {
    GfMatrix g(field, 0, n);
    GfMatrix h = GfMatrix::identity(field, n);
    return LinearCode(std::move(g), std::move(h));
}

LinearCode LinearCode::full_space(FieldPtr field, int n) {
    GfMatrix g = GfMatrix::identity(field, n);
    GfMatrix h(field, 0, n);
    return LinearCode(std::move(g), std::move(h));
}

bool LinearCode::contains(std::span<const Element> word) const {
    if (static_cast<int>(word.size()) != n_) throw Error(Errc::length_mismatch, "word length differs from n");
    const gf::FiniteField& f = field();
    for (std::size_t r = 0; r < h_.rows(); ++r) {
        Element acc = f.zero();
        for (int c = 0; c < n_; ++c) acc = f.add(acc, f.mul(h_(r, c), word[c]));
        if (!acc.is_zero()) return false;
    }
    return true;
}

std::vector<Element> LinearCode::encode(std::span<const Element> message) const {
    if (static_cast<int>(message.size()) != k_) throw Error(Errc::dimension_mismatch, "message length differs from k");
    const gf::FiniteField& f = field();
    std::vector<Element> out(n_);
    for (int r = 0; r < k_; ++r)
        for (int c = 0; c < n_; ++c) out[c] = f.add(out[c], f.mul(message[r], g_(r, c)));
    return out;
}

std::string LinearCode::to_string() const {
    std::ostringstream os;
    os << '[' << n_ << ',' << k_ << "]_" << field().q();
    return os.str();
}

LinearCode dual(const LinearCode& c) {
    if (c.k() == c.n()) return LinearCode::zero(c.field_ptr(), c.n());
    if (c.k() == 0) return LinearCode::full_space(c.field_ptr(), c.n());
    return LinearCode::from_generator(c.parity_check());
}

int min_distance(const LinearCode& c, const EnumOptions& opts) {
    if (c.k() == 0) throw Error(Errc::zero_code, "the zero code has no minimum distance");
    if (resolve(c, opts) == DistanceMethod::support) return support_weight(c, nullptr, opts.cap);
    require_enumerable(c, opts.cap);
    const std::vector<std::uint8_t> raw = c.generator().raw();
    return kernels::omp::min_weight_outside(space_of(c, raw), nullptr);
}

bool is_mds(const LinearCode& c) {
    if (c.k() == 0) return true;
    return linalg::all_k_subsets_nonsingular(c.generator(), static_cast<std::size_t>(c.k()));
}

bool is_subcode(const LinearCode& d, const LinearCode& c) {
    require_compatible(d, c);
    if (d.k() > c.k()) return false;
    for (std::size_t r = 0; r < d.generator().rows(); ++r)
        if (!c.contains(d.generator().row(r))) return false;
    return true;
}

int weight_of_difference(const LinearCode& c, const LinearCode& d, const EnumOptions& opts) {
    if (!is_subcode(d, c) || d.k() == c.k())
        throw Error(Errc::not_strict_subcode, d.to_string() + " is not a strict subcode of " + c.to_string());
    if (resolve(c, opts) == DistanceMethod::support) return support_weight(c, &d, opts.cap);
    require_enumerable(c, opts.cap);
    const std::vector<std::uint8_t> raw = c.generator().raw();
    const std::vector<std::uint8_t> hd = d.parity_check().raw();
    const kernels::ParityFilter filter{hd, d.n() - d.k()};
    return kernels::omp::min_weight_outside(space_of(c, raw), &filter);
}

LinearCode shorten(const LinearCode& c, int pos) {
    if (pos < 0 || pos >= c.n())
        throw Error(Errc::position_out_of_range,
                    "position " + std::to_string(pos) + " outside [0," + std::to_string(c.n()) + ")");
    if (c.n() == 1 || c.k() == 0) throw Error(Errc::zero_code, "shortening leaves the zero code");
    GfMatrix column(c.field_ptr(), 1, c.k());
    for (int r = 0; r < c.k(); ++r) column(0, r) = c.generator()(r, pos);
    const GfMatrix messages = linalg::nullspace(column);
    if (messages.rows() == 0) throw Error(Errc::zero_code, "no nonzero codeword vanishes at the position");
    const GfMatrix sub = linalg::mat_mul(messages, c.generator());
    return LinearCode::from_generator(sub.remove_column(static_cast<std::size_t>(pos)));
}

LinearCode puncture(const LinearCode& c, int pos) {
    if (pos < 0 || pos >= c.n())
        throw Error(Errc::position_out_of_range,
                    "position " + std::to_string(pos) + " outside [0," + std::to_string(c.n()) + ")");
    if (c.n() == 1 || c.k() == 0) throw Error(Errc::zero_code, "puncturing leaves the zero code");
    return LinearCode::from_generator(c.generator().remove_column(static_cast<std::size_t>(pos)));
}

LinearCode extend_by_codeword(const LinearCode& c, const LinearCode& c_prime) {
    require_compatible(c, c_prime);
    const int n = c.n();
    const int k = c.k();
    std::vector<std::string> broken;
    if (c_prime.k() != k + 1) broken.push_back("dim C' = dim C + 1");
    if (!is_subcode(c, c_prime)) broken.push_back("C subset of C'");
    if (!is_mds(c)) broken.push_back("C is MDS [n,k,n-k+1]");
    if (!is_mds(c_prime)) broken.push_back("C' is MDS [n,k+1,n-k]");
    if (!broken.empty()) {
        std::string msg = "extend_by_codeword preconditions failed:";
        for (const auto& b : broken) msg += " {" + b + "}";
        throw Error(Errc::precondition_failed, msg);
    }

    const gf::FiniteField& f = c.field();
    const std::vector<std::uint8_t> raw = c_prime.generator().raw();
    const kernels::CodewordSpace space = space_of(c_prime, raw);
    std::vector<std::uint8_t> word(n);
    std::vector<Element> w;
    for (std::uint64_t t = 1; t < space.size(); ++t) {
        space.codeword_at(t, word.data());
        std::vector<Element> cand(n);
        for (int i = 0; i < n; ++i) cand[i] = Element{word[i]};
        if (!c.contains(cand)) {
            w = std::move(cand);
            break;
        }
    }

    GfMatrix g(c.field_ptr(), k + 1, n + 1);
    for (int r = 0; r < k; ++r)
        for (int col = 0; col < n; ++col) g(r, col + 1) = c.generator()(r, col);
    g(k, 0) = f.one();
    for (int col = 0; col < n; ++col) g(k, col + 1) = w[col];
    LinearCode extended = LinearCode::from_generator(g);
    if (!is_mds(extended))
        throw Error(Errc::verification_failed, "extension " + extended.to_string() + " is not MDS");
    return extended;
}

std::optional<std::vector<Element>> full_weight_codeword(const LinearCode& c, std::uint64_t cap) {
    if (c.k() == 0) return std::nullopt;
    // Pivot coordinates equal the message digits: only all-nonzero messages are visited.
    const std::vector<std::uint8_t> raw = c.generator().raw();
    const kernels::FullWeightResult r = kernels::omp::first_full_weight(space_of(c, raw), cap);
    if (r.word) {
        std::vector<Element> out(c.n());
        for (int i = 0; i < c.n(); ++i) out[i] = Element{(*r.word)[i]};
        return out;
    }
    if (r.cap_hit)
        throw Error(Errc::cap_exceeded, "no full-weight codeword of " + c.to_string() + " among the first " +
                                            std::to_string(cap) + " candidates");
    return std::nullopt;
}

WeightReport weight_distribution(const LinearCode& c, std::uint64_t cap) {
    require_enumerable(c, cap);
    WeightReport report;
    const std::vector<std::uint8_t> raw = c.generator().raw();
    std::vector<std::uint64_t> hist = kernels::omp::weight_histogram(space_of(c, raw));
    report.min_weight = c.n() + 1;
    for (int w = 1; w <= c.n(); ++w) {
        if (hist[w] > 0) {
            report.min_weight = w;
            break;
        }
    }
    if (hist[c.n()] > 0) report.full_weight_codeword = full_weight_codeword(c, cap);
    report.distribution = std::move(hist);
    return report;
}

}  // namespace aqmds::code
