#include "aqmds/construct.hpp"

#include <set>
#include <string>

#include "aqmds/error.hpp"

namespace aqmds::construct {

namespace {

void require_points(const gf::FiniteField& f, const std::vector<Element>& alpha, std::size_t count) {
    if (alpha.size() != count)
        throw Error(Errc::invalid_spec,
                    "expected " + std::to_string(count) + " evaluation points, got " + std::to_string(alpha.size()));
    std::set<Element> seen;
    for (Element a : alpha) {
        if (!f.contains(a)) throw Error(Errc::invalid_spec, "evaluation point outside the field");
        if (!seen.insert(a).second)
            throw Error(Errc::invalid_spec, "duplicate evaluation point " + std::to_string(a.value()));
    }
}

void require_multipliers(const gf::FiniteField& f, const std::vector<Element>& v, std::size_t count) {
    if (v.size() != count)
        throw Error(Errc::invalid_spec,
                    "expected " + std::to_string(count) + " multipliers, got " + std::to_string(v.size()));
    for (Element x : v) {
        if (!f.contains(x)) throw Error(Errc::invalid_spec, "multiplier outside the field");
        if (x.is_zero()) throw Error(Errc::invalid_spec, "multipliers must be nonzero");
    }
}

void require_char_two(const gf::FiniteField& f) {
    if (f.p() != 2) throw Error(Errc::not_char_two, "GF(" + std::to_string(f.q()) + ") does not have characteristic 2");
    if (f.m() < 2) throw Error(Errc::degree_too_small, "length q+2 codes need q = 2^m with m >= 2");
}

void validate(const QPlus2Spec& spec) {
    const gf::FiniteField& f = *spec.field;
    require_char_two(f);
    require_points(f, spec.alpha, f.q() - 1);
    for (Element a : spec.alpha)
        if (a.is_zero()) throw Error(Errc::invalid_spec, "alpha_1..alpha_{q-1} must be nonzero");
    require_multipliers(f, spec.v, f.q() + 2);
}

}  // namespace

std::vector<Element> default_points(const gf::FiniteField& f) {
    std::vector<Element> out;
    for (int i = 1; i < f.q(); ++i) out.emplace_back(i);
    out.emplace_back(0);
    return out;
}

std::vector<Element> ones(int count) { return std::vector<Element>(count, Element{1}); }

GrsSpec GrsSpec::with_defaults(FieldPtr field, int n, int k) {
    GrsSpec s;
    s.field = field;
    s.n = n;
    s.k = k;
    std::vector<Element> pts = default_points(*field);
    if (n >= 0 && n <= static_cast<int>(pts.size())) pts.resize(n);
    s.alpha = std::move(pts);
    s.v = ones(n < 0 ? 0 : n);
    return s;
}

GfMatrix grs_generator(const GrsSpec& spec) {
    const gf::FiniteField& f = *spec.field;
    if (spec.n < 1) throw Error(Errc::invalid_spec, "n must be positive");
    if (spec.n > f.q()) throw Error(Errc::invalid_spec, "n exceeds q");
    if (spec.k < 1 || spec.k > spec.n) throw Error(Errc::invalid_spec, "k must satisfy 1 <= k <= n");
    require_points(f, spec.alpha, spec.n);
    require_multipliers(f, spec.v, spec.n);
    GfMatrix g(spec.field, spec.k, spec.n);
    for (int i = 0; i < spec.k; ++i)
        for (int j = 0; j < spec.n; ++j) g(i, j) = f.mul(spec.v[j], f.pow(spec.alpha[j], i));
    return g;
}

LinearCode grs(const GrsSpec& spec) { return LinearCode::from_generator(grs_generator(spec)); }

ExtendedGrsSpec ExtendedGrsSpec::with_defaults(FieldPtr field, int k) {
    ExtendedGrsSpec s;
    s.field = field;
    s.k = k;
    s.alpha = default_points(*field);
    s.v = ones(field->q() + 1);
    return s;
}

GfMatrix extended_grs_generator(const ExtendedGrsSpec& spec) {
    const gf::FiniteField& f = *spec.field;
    const int q = f.q();
    if (spec.k < 1 || spec.k > q) throw Error(Errc::invalid_spec, "extended GRS needs 1 <= k <= q");
    require_points(f, spec.alpha, q);
    require_multipliers(f, spec.v, q + 1);
    GfMatrix g(spec.field, spec.k, q + 1);
    for (int i = 0; i < spec.k; ++i)
        for (int j = 0; j < q; ++j) g(i, j) = f.mul(spec.v[j], f.pow(spec.alpha[j], i));
    g(spec.k - 1, q) = spec.v[q];
    return g;
}

LinearCode extended_grs(const ExtendedGrsSpec& spec) { return LinearCode::from_generator(extended_grs_generator(spec)); }

IrreducibleSubcode grs_subcode_irreducible(const ExtendedGrsSpec& spec, int r) {
    if (r < 1 || r > spec.k - 2)
        throw Error(Errc::invalid_range, "r = " + std::to_string(r) + " outside [1, k-2] = [1, " +
                                             std::to_string(spec.k - 2) + "]");
    return grs_subcode_with_polynomial(spec, r, gf::find_irreducible(*spec.field, spec.k - r));
}

IrreducibleSubcode grs_subcode_with_polynomial(const ExtendedGrsSpec& spec, int r, const gf::Poly& p) {
    const gf::FiniteField& f = *spec.field;
    const int q = f.q();
    if (r < 1 || r > spec.k - 2)
        throw Error(Errc::invalid_range, "r = " + std::to_string(r) + " outside [1, k-2] = [1, " +
                                             std::to_string(spec.k - 2) + "]");
    const GfMatrix e_gen = extended_grs_generator(spec);  // validates spec

    for (Element c : p)
        if (!f.contains(c)) throw Error(Errc::invalid_spec, "polynomial coefficient outside the field");
    if (gf::degree(p) != spec.k - r || p.back() != f.one())
        throw Error(Errc::invalid_spec, "polynomial must be monic of degree k - r = " + std::to_string(spec.k - r));
    if (!gf::is_irreducible(f, p)) throw Error(Errc::invalid_spec, "polynomial is reducible");

    std::vector<Element> p_at(q);
    for (int j = 0; j < q; ++j) {
        p_at[j] = gf::poly_eval(f, p, spec.alpha[j]);
        if (p_at[j].is_zero()) throw Error(Errc::precondition_failed, "irreducible polynomial has a root");
    }

    GfMatrix g(spec.field, r, q + 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < q; ++j) g(i, j) = f.mul(f.mul(spec.v[j], f.pow(spec.alpha[j], i)), p_at[j]);
    g(r - 1, q) = spec.v[q];

    LinearCode c = LinearCode::from_generator(g);
    if (!code::is_subcode(c, LinearCode::from_generator(e_gen)))
        throw Error(Errc::verification_failed, "irreducible-polynomial subcode is not contained in E");
    return {std::move(c), std::move(g), p};
}

QPlus2Spec QPlus2Spec::with_defaults(FieldPtr field) {
    QPlus2Spec s;
    s.field = field;
    std::vector<Element> pts = default_points(*field);
    pts.pop_back();  // drop the trailing zero
    s.alpha = std::move(pts);
    s.v = ones(field->q() + 2);
    return s;
}

GfMatrix q_plus_2_parity_check(const QPlus2Spec& spec) {
    validate(spec);
    const gf::FiniteField& f = *spec.field;
    const int q = f.q();
    GfMatrix h(spec.field, 3, q + 2);
    for (int l = 0; l < q - 1; ++l) {
        h(0, l) = spec.v[l];
        h(1, l) = f.mul(spec.v[l], spec.alpha[l]);
        h(2, l) = f.mul(spec.v[l], f.pow(spec.alpha[l], 2));
    }
    h(0, q - 1) = spec.v[q - 1];
    h(1, q) = spec.v[q];
    h(2, q + 1) = spec.v[q + 1];
    return h;
}

GfMatrix q_plus_2_low_generator(const QPlus2Spec& spec) {
    validate(spec);
    const gf::FiniteField& f = *spec.field;
    const int q = f.q();
    GfMatrix g(spec.field, 3, q + 2);
    for (int l = 0; l < q - 1; ++l) {
        const Element vi = f.inv(spec.v[l]);
        g(0, l) = vi;
        g(1, l) = f.mul(vi, f.pow(spec.alpha[l], -1));
        g(2, l) = f.mul(vi, f.pow(spec.alpha[l], -2));
    }
    g(0, q - 1) = f.inv(spec.v[q - 1]);
    g(1, q) = f.inv(spec.v[q]);
    g(2, q + 1) = f.inv(spec.v[q + 1]);
    return g;
}

LinearCode q_plus_2_high(const QPlus2Spec& spec) {
    return LinearCode::from_generator(linalg::nullspace(q_plus_2_parity_check(spec)));
}

LinearCode q_plus_2_low(const QPlus2Spec& spec) {
    const GfMatrix g = q_plus_2_low_generator(spec);
    const GfMatrix m = linalg::mat_mul(g, linalg::transpose(q_plus_2_parity_check(spec)));
    if (!m.is_zero()) throw Error(Errc::verification_failed, "G H^T is nonzero for the length q+2 pair");
    return LinearCode::from_generator(g);
}

LinearCode repetition(FieldPtr field, int n) {
    if (n < 1) throw Error(Errc::invalid_spec, "n must be positive");
    GfMatrix g(field, 1, n);
    for (int j = 0; j < n; ++j) g(0, j) = Element{1};
    return LinearCode::from_generator(g);
}

LinearCode dual_repetition(FieldPtr field, int n) {
    if (n < 2) throw Error(Errc::invalid_spec, "dual repetition code needs n >= 2");
    return code::dual(repetition(field, n));
}

}  // namespace aqmds::construct
