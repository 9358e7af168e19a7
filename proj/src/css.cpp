#include "aqmds/css.hpp"

#include <algorithm>
#include <sstream>

#include "aqmds/error.hpp"

namespace aqmds::css {

std::string AqcParams::to_string() const {
    std::ostringstream os;
    os << "[[" << n << ',' << k << ',' << dz << '/' << dx << "]]_" << q;
    return os.str();
}

bool singleton_holds(const AqcParams& p) noexcept { return p.k <= p.n - p.dx - p.dz + 2; }
bool singleton_tight(const AqcParams& p) noexcept { return p.k == p.n - p.dx - p.dz + 2; }

NestedPair::NestedPair(LinearCode c1, LinearCode c2, LinearCode c1d, LinearCode c2d)
    : c1_(std::move(c1)), c2_(std::move(c2)), c1_dual_(std::move(c1d)), c2_dual_(std::move(c2d)) {}

NestedPair make_pair(LinearCode c1, LinearCode c2) {
    if (!(c1.field() == c2.field())) throw Error(Errc::field_mismatch, "C1 and C2 are over different fields");
    if (c1.n() != c2.n()) throw Error(Errc::length_mismatch, "C1 and C2 have different lengths");
    LinearCode c1d = code::dual(c1);
    const auto& g = c1d.generator();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        if (!c2.contains(g.row(r))) {
            std::ostringstream os;
            os << "C1^perp is not contained in C2: row " << r << " (";
            for (std::size_t c = 0; c < g.cols(); ++c) os << (c ? "," : "") << g(r, c).value();
            os << ") fails the parity check of C2";
            throw Error(Errc::not_nested, os.str());
        }
    }
    LinearCode c2d = code::dual(c2);
    if (!code::is_subcode(c2d, c1)) throw Error(Errc::not_nested, "C2^perp is not contained in C1");
    return NestedPair(std::move(c1), std::move(c2), std::move(c1d), std::move(c2d));
}

AqcParams css_construct(const NestedPair& pair, const code::EnumOptions& opts) {
    const LinearCode& c1 = pair.c1();
    const LinearCode& c2 = pair.c2();
    AqcParams p;
    p.q = c1.field().q();
    p.n = c1.n();
    p.k = pair.quantum_dimension();
    if (p.k < 0 || c1.k() == 0 || c2.k() == 0)
        throw Error(Errc::degenerate_input, "pair with a zero code or negative quantum dimension");

    p.d1 = code::min_distance(c1, opts);
    p.d2 = code::min_distance(c2, opts);
    if (p.k == 0) {
        p.dz = std::max(p.d1, p.d2);
        p.dx = std::min(p.d1, p.d2);
        p.pure = true;
    } else {
        const int a = code::weight_of_difference(c2, pair.c1_dual(), opts);
        const int b = code::weight_of_difference(c1, pair.c2_dual(), opts);
        p.wt_c2_minus_c1perp = a;
        p.wt_c1_minus_c2perp = b;
        p.dz = std::max(a, b);
        p.dx = std::min(a, b);
        p.pure = p.dz == std::max(p.d1, p.d2) && p.dx == std::min(p.d1, p.d2);
    }
    p.aqmds = singleton_tight(p);
    return p;
}

FullWeightCss from_full_weight(const LinearCode& c, const code::EnumOptions& opts) {
    if (c.k() < 2)
        throw Error(Errc::dimension_too_small, c.to_string() + " has dimension below 2");
    auto u = code::full_weight_codeword(c, opts.cap);
    if (!u) throw Error(Errc::no_full_weight_word, c.to_string() + " has no codeword of full weight");
    linalg::GfMatrix g(c.field_ptr(), 1, c.n());
    for (int i = 0; i < c.n(); ++i) g(0, i) = (*u)[i];
    NestedPair pair = make_pair(code::dual(LinearCode::from_generator(g)), c);
    AqcParams params = css_construct(pair, opts);
    return {params, std::move(pair), std::move(*u)};
}

}  // namespace aqmds::css
