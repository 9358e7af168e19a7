#include "aqmds/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <exception>
#include <map>
#include <sstream>
#include <tuple>

#include "aqmds/construct.hpp"
#include "aqmds/error.hpp"
#include "aqmds/kernels.hpp"

namespace aqmds::catalog {

namespace {

using code::LinearCode;
using gf::Element;
using gf::FieldPtr;

constexpr std::array<std::string_view, 7> kFamilyTags{"PROP5", "PROP6", "TH7", "TH8", "COR10", "TH11", "TH12"};
constexpr std::array<std::string_view, 6> kSourceTags{"repetition",   "dual_repetition", "grs",
                                                      "extended_grs", "qplus2_low",      "qplus2_high"};

// Which family supplies the recipe when several reach the same tuple.
constexpr std::array<int, 7> kRecipePriority{5, 4, 3, 2, 1, 0, 6};

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

[[noreturn]] void invalid(const std::string& msg) { throw Error(Errc::recipe_invalid, msg); }

bool is_even_power(int q) {
    const auto [p, m] = gf::prime_power_decompose(q);
    return p == 2 && m >= 2;
}

FieldPtr field_for(int q) {
    try {
        return gf::make_field(q);
    } catch (const Error& e) {
        invalid(e.what());
    }
}

std::vector<Element> elements(const gf::FiniteField& f, const std::vector<int>& xs, const char* what) {
    std::vector<Element> out;
    out.reserve(xs.size());
    for (int x : xs) {
        if (x < 0 || x >= f.q()) invalid(std::string(what) + " entry " + std::to_string(x) + " outside the field");
        out.emplace_back(x);
    }
    return out;
}

template <class Spec>
void apply_overrides(const gf::FiniteField& f, Spec& spec, const std::vector<int>& alpha, const std::vector<int>& v) {
    if (!alpha.empty()) spec.alpha = elements(f, alpha, "alpha");
    if (!v.empty()) spec.v = elements(f, v, "v");
}

// Construction errors from malformed inputs surface as recipe_invalid.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        switch (e.kind()) {
            case Errc::invalid_spec:
            case Errc::invalid_range:
            case Errc::not_char_two:
            case Errc::degree_too_small:
            case Errc::field_mismatch:
            case Errc::precondition_failed:
                invalid(e.what());
            default:
                throw;
        }
    }
}

LinearCode build_source(const CodeSource& s, int q) {
    const FieldPtr field = field_for(q);
    const gf::FiniteField& f = *field;
    if (s.n < 2) invalid("source length must be at least 2");
    if (s.k < 1 || s.k > s.n - 1) invalid("source dimension must satisfy 1 <= k <= n-1");
    return guarded([&]() -> LinearCode {
        switch (s.kind) {
            case SourceKind::repetition:
                if (s.k != 1) invalid("repetition source needs k = 1");
                return construct::repetition(field, s.n);
            case SourceKind::dual_repetition:
                if (s.k != s.n - 1) invalid("dual repetition source needs k = n-1");
                return construct::dual_repetition(field, s.n);
            case SourceKind::grs: {
                auto spec = construct::GrsSpec::with_defaults(field, s.n, s.k);
                apply_overrides(f, spec, s.alpha, s.v);
                return construct::grs(spec);
            }
            case SourceKind::extended_grs: {
                if (s.n != q + 1) invalid("extended GRS source needs n = q+1");
                auto spec = construct::ExtendedGrsSpec::with_defaults(field, s.k);
                apply_overrides(f, spec, s.alpha, s.v);
                return construct::extended_grs(spec);
            }
            case SourceKind::qplus2_low:
            case SourceKind::qplus2_high: {
                const bool low = s.kind == SourceKind::qplus2_low;
                if (s.n != q + 2) invalid("length q+2 source needs n = q+2");
                if (s.k != (low ? 3 : q - 1)) invalid(low ? "low length q+2 source has k = 3"
                                                          : "high length q+2 source has k = q-1");
                auto spec = construct::QPlus2Spec::with_defaults(field);
                apply_overrides(f, spec, s.alpha, s.v);
                return low ? construct::q_plus_2_low(spec) : construct::q_plus_2_high(spec);
            }
        }
        invalid("unknown source kind");
    });
}

void require_source(const Recipe& r) {
    if (!r.source) invalid(std::string(family_tag(r.family)) + " recipe needs a source code");
    if (r.source->n != r.n || r.source->k != r.k) invalid("source dimensions disagree with the recipe");
}

}  // namespace

std::string_view family_tag(Family f) noexcept { return kFamilyTags[static_cast<std::size_t>(f)]; }

std::optional<Family> parse_family(std::string_view tag) noexcept {
    for (std::size_t i = 0; i < kFamilyTags.size(); ++i)
        if (iequals(tag, kFamilyTags[i])) return static_cast<Family>(i);
    return std::nullopt;
}

std::string_view source_tag(SourceKind s) noexcept { return kSourceTags[static_cast<std::size_t>(s)]; }

std::optional<SourceKind> parse_source(std::string_view tag) noexcept {
    for (std::size_t i = 0; i < kSourceTags.size(); ++i) {
        std::string dashed(kSourceTags[i]);
        std::replace(dashed.begin(), dashed.end(), '_', '-');
        if (iequals(tag, kSourceTags[i]) || iequals(tag, dashed)) return static_cast<SourceKind>(i);
    }
    return std::nullopt;
}

std::string_view verify_level_tag(VerifyLevel l) noexcept {
    return l == VerifyLevel::closed_form ? "closed_form" : "full_oracle";
}

std::optional<VerifyLevel> parse_verify_level(std::string_view tag) noexcept {
    if (iequals(tag, "closed_form") || iequals(tag, "closed-form")) return VerifyLevel::closed_form;
    if (iequals(tag, "full_oracle") || iequals(tag, "full-oracle")) return VerifyLevel::full_oracle;
    return std::nullopt;
}

int max_length(int q) { return q % 2 == 1 ? q + 1 : q + 2; }

std::optional<CodeSource> default_source(int q, int n, int k) {
    if (n < 2 || k < 1 || k > n - 1) return std::nullopt;
    if (k == 1) return CodeSource{SourceKind::repetition, n, 1, {}, {}};
    if (k == n - 1) return CodeSource{SourceKind::dual_repetition, n, k, {}, {}};
    if (n <= q) return CodeSource{SourceKind::grs, n, k, {}, {}};
    if (n == q + 1) return CodeSource{SourceKind::extended_grs, n, k, {}, {}};
    if (n == q + 2 && is_even_power(q)) {
        if (k == 3) return CodeSource{SourceKind::qplus2_low, n, k, {}, {}};
        if (k == q - 1) return CodeSource{SourceKind::qplus2_high, n, k, {}, {}};
    }
    return std::nullopt;
}

Recipe default_recipe(Family family, int q, int n, int k, int j) {
    const FieldPtr field = field_for(q);
    Recipe r;
    r.family = family;
    r.q = q;
    switch (family) {
        case Family::th7:
            r.n = n;
            r.k = k;
            r.j = j;
            break;
        case Family::th8:
            r.n = q + 1;
            r.k = k;
            r.j = j;
            r.r = k - j;
            if (j >= 1 && j < k && q >= 3) {
                const gf::Poly p = gf::find_irreducible(*field, j);
                for (Element c : p) r.irreducible.push_back(c.value());
            }
            break;
        case Family::cor10:
            r.n = q + 1;
            r.k = 2;
            r.j = 1;
            break;
        case Family::th11:
            r.n = q + 2;
            r.k = 3;
            r.j = q - 4;
            break;
        case Family::prop5:
        case Family::prop6:
        case Family::th12: {
            r.n = n;
            r.k = k;
            r.source = default_source(q, n, k);
            if (!r.source)
                invalid("no MDS code [" + std::to_string(n) + "," + std::to_string(k) + "] over GF(" +
                        std::to_string(q) + ") is available");
            r.j = family == Family::prop5 ? k : family == Family::prop6 ? 0 : k - 1;
            break;
        }
    }
    closed_form(r);  // validates
    return r;
}

ClosedForm closed_form(const Recipe& r) {
    const auto [p, m] = gf::prime_power_decompose(r.q);
    if (p == 0 || r.q > gf::kMaxOrder) invalid("q = " + std::to_string(r.q) + " is not a supported prime power");
    const int q = r.q;
    auto ordered = [](int n, int j, int a, int b) { return ClosedForm{n, j, std::max(a, b), std::min(a, b)}; };
    auto need = [](bool ok, const std::string& msg) {
        if (!ok) invalid(msg);
    };
    switch (r.family) {
        case Family::th7:
            need(q >= 3, "TH7 needs q >= 3");
            need(r.n >= 3 && r.n <= q, "TH7 needs 3 <= n <= q");
            need(r.k >= 1 && r.k <= r.n - 2, "TH7 needs 1 <= k <= n-2");
            need(r.j >= 1 && r.j <= r.n - r.k - 1, "TH7 needs 1 <= j <= n-k-1");
            return ordered(r.n, r.j, r.n - r.k - r.j + 1, r.k + 1);
        case Family::th8:
            need(q >= 3, "TH8 needs q >= 3");
            need(r.n == q + 1, "TH8 has length q+1");
            need(r.k >= 3 && r.k <= q, "TH8 needs 3 <= k <= q");
            need(r.j >= 2 && r.j <= r.k - 1, "TH8 needs 2 <= j <= k-1");
            need(r.r == r.k - r.j, "TH8 needs r = k - j");
            need(r.irreducible.empty() || static_cast<int>(r.irreducible.size()) == r.j + 1,
                 "TH8 needs a degree k-r polynomial");
            return ordered(r.n, r.j, q - r.k + 2, r.k - r.j + 1);
        case Family::cor10:
            need(p == 2 && m >= 2, "COR10 needs q = 2^m with m >= 2");
            need(r.n == q + 1 && r.k == 2 && r.j == 1, "COR10 is the [[q+1,1,(q-1)/3]] pair");
            return ordered(r.n, 1, 3, q - 1);
        case Family::th11:
            need(p == 2 && m >= 2, "TH11 needs q = 2^m with m >= 2");
            need(r.n == q + 2 && r.k == 3 && r.j == q - 4, "TH11 is the [[q+2,q-4,4/4]] pair");
            return ordered(r.n, r.j, 4, 4);
        case Family::prop5:
            require_source(r);
            need(r.j == r.k, "PROP5 has j = k");
            return ordered(r.n, r.j, r.n - r.k + 1, 1);
        case Family::prop6:
            require_source(r);
            need(r.j == 0, "PROP6 has j = 0");
            return ordered(r.n, 0, r.n - r.k + 1, r.k + 1);
        case Family::th12:
            require_source(r);
            need(r.k >= 2, "TH12 needs a source of dimension at least 2");
            need(r.j == r.k - 1, "TH12 has j = k-1");
            if (r.codeword) need(static_cast<int>(r.codeword->size()) == r.n, "TH12 codeword has the wrong length");
            return ordered(r.n, r.j, r.n - r.k + 1, 2);
    }
    invalid("unknown family");
}

css::NestedPair build_pair(const Recipe& r) {
    closed_form(r);
    const FieldPtr field = field_for(r.q);
    const gf::FiniteField& f = *field;
    const int q = r.q;
    switch (r.family) {
        case Family::th7: {
            auto [c1, c2] = guarded([&] {
                auto lo = construct::GrsSpec::with_defaults(field, r.n, r.k);
                apply_overrides(f, lo, r.alpha, r.v);
                auto hi = lo;
                hi.k = r.k + r.j;
                return std::make_pair(code::dual(construct::grs(lo)), construct::grs(hi));
            });
            return css::make_pair(std::move(c1), std::move(c2));
        }
        case Family::th8: {
            auto [c1, c2] = guarded([&] {
                auto spec = construct::ExtendedGrsSpec::with_defaults(field, r.k);
                apply_overrides(f, spec, r.alpha, r.v);
                const gf::Poly p = r.irreducible.empty() ? gf::find_irreducible(f, r.j)
                                                         : elements(f, r.irreducible, "irreducible");
                auto sub = construct::grs_subcode_with_polynomial(spec, r.r, p);
                return std::make_pair(code::dual(sub.code), construct::extended_grs(spec));
            });
            return css::make_pair(std::move(c1), std::move(c2));
        }
        case Family::cor10:
        case Family::th11: {
            auto [c1, c2] = guarded([&] {
                auto spec = construct::QPlus2Spec::with_defaults(field);
                apply_overrides(f, spec, r.alpha, r.v);
                const LinearCode low = construct::q_plus_2_low(spec);
                if (r.family == Family::th11) return std::make_pair(code::dual(low), construct::q_plus_2_high(spec));
                const int last = q + 1;
                return std::make_pair(code::dual(code::shorten(low, last)), code::puncture(low, last));
            });
            return css::make_pair(std::move(c1), std::move(c2));
        }
        case Family::prop5: {
            LinearCode c = build_source(*r.source, q);
            return css::make_pair(std::move(c), LinearCode::full_space(field, r.n));
        }
        case Family::prop6: {
            LinearCode c = build_source(*r.source, q);
            LinearCode c_dual = code::dual(c);
            return css::make_pair(std::move(c_dual), std::move(c));
        }
        case Family::th12: {
            LinearCode c = build_source(*r.source, q);
            std::vector<Element> u;
            if (r.codeword) {
                u = elements(f, *r.codeword, "codeword");
                for (Element x : u)
                    if (x.is_zero()) invalid("TH12 codeword is not of full weight");
                if (!c.contains(u)) invalid("TH12 codeword is not in the source code");
            } else {
                auto found = code::full_weight_codeword(c);
                if (!found) throw Error(Errc::no_full_weight_word, c.to_string() + " has no codeword of full weight");
                u = std::move(*found);
            }
            linalg::GfMatrix g(field, 1, r.n);
            for (int i = 0; i < r.n; ++i) g(0, i) = u[i];
            return css::make_pair(code::dual(LinearCode::from_generator(g)), std::move(c));
        }
    }
    invalid("unknown family");
}

std::string Certificate::label() const {
    std::ostringstream os;
    os << "[[" << n << ',' << j << ',' << dz << '/' << dx << "]]_" << q;
    return os.str();
}

const std::vector<std::string>& oracle_names() {
    static const std::vector<std::string> names{"singleton_equality", "closed_form", "nesting", "dimension",
                                                "mds_c1_dual",        "mds_c2",      "exact_dz_dx", "purity"};
    return names;
}

namespace {

class OracleLog {
public:
    void pass(const std::string& name) { log_.push_back(name + ":pass"); }
    void fail(const std::string& name) {
        log_.push_back(name + ":fail");
        if (!first_failure_) first_failure_ = name;
    }
    void skip(const std::string& name, const std::string& why) {
        log_.push_back(name + ":skipped(" + why + ")");
        skipped_ = true;
    }
    void check(const std::string& name, bool ok) { ok ? pass(name) : fail(name); }
    bool failed() const { return first_failure_.has_value(); }
    // Marks every oracle after `name` as skipped.
    void skip_rest(const std::string& after, const std::string& why) {
        const auto& names = oracle_names();
        auto it = std::find(names.begin(), names.end(), after);
        for (++it; it != names.end(); ++it) skip(*it, why);
    }
    bool all_passed() const { return !skipped_ && !first_failure_; }

    std::vector<std::string> log_;
    std::optional<std::string> first_failure_;
    bool skipped_ = false;
};

bool claimed_singleton(const Certificate& c) {
    return c.j >= 0 && c.dx >= 1 && c.dz >= c.dx && c.n >= 1 && c.j == c.n - c.dz - c.dx + 2 && c.aqmds;
}

// Checks the MDS property on whichever of C, C^perp has the smaller dimension.
std::optional<bool> mds_within_budget(const LinearCode& c, std::uint64_t cap) {
    if (c.k() == 0 || c.k() == c.n()) return true;
    if (kernels::binomial(c.n(), c.k()) > cap) return std::nullopt;
    return 2 * c.k() <= c.n() ? code::is_mds(c) : code::is_mds(code::dual(c));
}

}  // namespace

ReplayOutcome replay(const Certificate& cert, const code::EnumOptions& opts) {
    OracleLog log;
    Certificate out = cert;
    out.diff_weights.reset();

    auto finish = [&]() {
        out.oracle_log = std::move(log.log_);
        out.verified = log.all_passed();
        return ReplayOutcome{std::move(out), log.first_failure_};
    };

    log.check("singleton_equality", claimed_singleton(cert));
    if (log.failed()) {
        log.skip_rest("singleton_equality", "after failure");
        return finish();
    }

    const ClosedForm cf = closed_form(cert.recipe);
    log.check("closed_form", cert.q == cert.recipe.q && cf.n == cert.n && cf.j == cert.j && cf.dz == cert.dz &&
                                 cf.dx == cert.dx);
    if (log.failed()) {
        log.skip_rest("closed_form", "after failure");
        return finish();
    }

    if (out.recipe.family == Family::th8 && out.recipe.irreducible.empty()) {
        for (Element c : gf::find_irreducible(*field_for(out.recipe.q), out.recipe.j))
            out.recipe.irreducible.push_back(c.value());
    }
    std::optional<css::NestedPair> pair;
    try {
        pair.emplace(build_pair(out.recipe));
        log.pass("nesting");
    } catch (const Error& e) {
        if (e.kind() == Errc::not_nested || e.kind() == Errc::no_full_weight_word) {
            log.fail("nesting");
            log.skip_rest("nesting", "after failure");
        } else if (e.kind() == Errc::cap_exceeded) {
            log.skip("nesting", "cap");
            log.skip_rest("nesting", "cap");
        } else {
            throw;
        }
        return finish();
    }

    log.check("dimension", pair->quantum_dimension() == cert.j);
    if (log.failed()) {
        log.skip_rest("dimension", "after failure");
        return finish();
    }

    const auto mds1 = mds_within_budget(pair->c1_dual(), opts.cap);
    if (!mds1) log.skip("mds_c1_dual", "cap");
    else log.check("mds_c1_dual", *mds1);
    if (log.failed()) {
        log.skip_rest("mds_c1_dual", "after failure");
        return finish();
    }
    const auto mds2 = mds_within_budget(pair->c2(), opts.cap);
    if (!mds2) log.skip("mds_c2", "cap");
    else log.check("mds_c2", *mds2);
    if (log.failed()) {
        log.skip_rest("mds_c2", "after failure");
        return finish();
    }

    try {
        const css::AqcParams p = css::css_construct(*pair, opts);
        if (p.wt_c2_minus_c1perp && p.wt_c1_minus_c2perp)
            out.diff_weights = std::make_pair(*p.wt_c2_minus_c1perp, *p.wt_c1_minus_c2perp);
        log.check("exact_dz_dx", p.dz == cert.dz && p.dx == cert.dx);
        if (log.failed()) {
            log.skip_rest("exact_dz_dx", "after failure");
            return finish();
        }
        log.check("purity", p.pure && cert.pure);
    } catch (const Error& e) {
        if (e.kind() != Errc::cap_exceeded) throw;
        log.skip("exact_dz_dx", "cap");
        log.skip("purity", "cap");
    }
    return finish();
}

Certificate verify(const Certificate& cert, const code::EnumOptions& opts) {
    ReplayOutcome r = replay(cert, opts);
    if (r.first_failure) throw Error(Errc::verification_failed, *r.first_failure);
    return std::move(r.certificate);
}

namespace {

struct Candidate {
    ClosedForm cf;
    Family family;
    Recipe recipe;
};

std::vector<CodeSource> sources_at(int q, int n) {
    std::vector<CodeSource> out;
    for (int k = 1; k <= n - 1; ++k)
        if (auto s = default_source(q, n, k)) out.push_back(std::move(*s));
    return out;
}

// The full-weight search fails only for the binary dual repetition code of odd
// length and for [q+1, 2, q] codes.
bool has_full_weight_word(int q, const CodeSource& s) {
    if (s.k < 2) return s.k == 1;
    if (q == 2 && s.kind == SourceKind::dual_repetition && s.n % 2 == 1) return false;
    if (s.n == q + 1 && s.k == 2) return false;
    return true;
}

void candidates_at(int q, int n, std::vector<Candidate>& out) {
    auto add = [&](Recipe r) {
        const ClosedForm cf = closed_form(r);
        out.push_back({cf, r.family, std::move(r)});
    };
    for (const CodeSource& s : sources_at(q, n)) {
        Recipe base;
        base.q = q;
        base.n = n;
        base.k = s.k;
        base.source = s;

        Recipe r5 = base;
        r5.family = Family::prop5;
        r5.j = s.k;
        add(std::move(r5));

        Recipe r6 = base;
        r6.family = Family::prop6;
        r6.j = 0;
        add(std::move(r6));

        if (s.k >= 2 && has_full_weight_word(q, s)) {
            Recipe r12 = base;
            r12.family = Family::th12;
            r12.j = s.k - 1;
            add(std::move(r12));
        }
    }
    if (q >= 3 && n >= 3 && n <= q) {
        for (int k = 1; k <= n - 2; ++k)
            for (int j = 1; j <= n - k - 1; ++j) {
                Recipe r;
                r.family = Family::th7;
                r.q = q;
                r.n = n;
                r.k = k;
                r.j = j;
                add(std::move(r));
            }
    }
    if (q >= 3 && n == q + 1) {
        for (int k = 3; k <= q; ++k)
            for (int j = 2; j <= k - 1; ++j) {
                Recipe r;
                r.family = Family::th8;
                r.q = q;
                r.n = n;
                r.k = k;
                r.j = j;
                r.r = k - j;
                add(std::move(r));
            }
    }
    if (is_even_power(q) && n == q + 1) {
        Recipe r;
        r.family = Family::cor10;
        r.q = q;
        r.n = n;
        r.k = 2;
        r.j = 1;
        add(std::move(r));
    }
    if (is_even_power(q) && n == q + 2) {
        Recipe r;
        r.family = Family::th11;
        r.q = q;
        r.n = n;
        r.k = 3;
        r.j = q - 4;
        add(std::move(r));
    }
}

using Key = std::tuple<int, int, int, int>;

Key key_of(const ClosedForm& cf) { return {cf.n, cf.j, cf.dz, cf.dx}; }

// Collapses candidates sharing a tuple into one certificate, in key order.
std::vector<Certificate> group(int q, std::vector<Candidate> cands) {
    std::map<Key, std::vector<const Candidate*>> by_key;
    for (const Candidate& c : cands) by_key[key_of(c.cf)].push_back(&c);

    std::vector<Certificate> out;
    out.reserve(by_key.size());
    for (const auto& [key, list] : by_key) {
        Certificate cert;
        cert.q = q;
        std::tie(cert.n, cert.j, cert.dz, cert.dx) = key;
        cert.pure = true;
        cert.aqmds = true;
        const Candidate* best = list.front();
        for (const Candidate* c : list) {
            if (std::find(cert.families.begin(), cert.families.end(), c->family) == cert.families.end())
                cert.families.push_back(c->family);
            if (kRecipePriority[static_cast<std::size_t>(c->family)] <
                kRecipePriority[static_cast<std::size_t>(best->family)])
                best = c;
        }
        std::sort(cert.families.begin(), cert.families.end());
        cert.recipe = best->recipe;
        out.push_back(std::move(cert));
    }
    return out;
}

void mark_closed_form(Certificate& c) {
    c.oracle_log.clear();
    c.oracle_log.push_back("singleton_equality:" + std::string(claimed_singleton(c) ? "pass" : "fail"));
    c.oracle_log.push_back("closed_form:pass");
    const auto& names = oracle_names();
    for (std::size_t i = 2; i < names.size(); ++i) c.oracle_log.push_back(names[i] + ":skipped(closed_form level)");
    c.verified = false;
}

void validate_q(int q) {
    if (q < 2 || gf::prime_power_decompose(q).first == 0)
        throw Error(Errc::not_prime_power, std::to_string(q) + " is not a prime power");
    if (q > gf::kMaxOrder)
        throw Error(Errc::cap_exceeded,
                    "q = " + std::to_string(q) + " exceeds the field cap " + std::to_string(gf::kMaxOrder));
}

bool matches_distances(const Certificate& c, std::optional<int> dz, std::optional<int> dx) {
    if (dz && dx) return std::max(*dz, *dx) == c.dz && std::min(*dz, *dx) == c.dx;
    if (dz) return *dz == c.dz || *dz == c.dx;
    if (dx) return *dx == c.dz || *dx == c.dx;
    return true;
}

void run_oracles(std::vector<Certificate>& certs) {
    std::vector<std::exception_ptr> errors(certs.size());
    const long long count = static_cast<long long>(certs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
        try {
            certs[i] = replay(certs[i]).certificate;
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<Certificate> enumerate(const CatalogQuery& query) {
    validate_q(query.q);
    const int q = query.q;
    if (query.n && (*query.n < 1 || *query.n > q + 2))
        throw Error(Errc::invalid_range, "length filter outside [1, q+2]");

    std::vector<Candidate> cands;
    const int lo = query.n ? *query.n : 2;
    const int hi = query.n ? *query.n : max_length(q);
    for (int n = std::max(lo, 2); n <= std::min(hi, max_length(q)); ++n) candidates_at(q, n, cands);

    std::vector<Certificate> all = group(q, std::move(cands));
    std::vector<Certificate> out;
    for (Certificate& c : all) {
        if (query.j && c.j != *query.j) continue;
        if (!matches_distances(c, query.dz, query.dx)) continue;
        if (query.min_dx && c.dx < *query.min_dx) continue;
        mark_closed_form(c);
        out.push_back(std::move(c));
    }
    if (query.level == VerifyLevel::full_oracle) run_oracles(out);
    return out;
}

ExistsResult exists(int q, int n, int j, int dz, int dx, VerifyLevel level) {
    ExistsResult res;
    if (q < 2 || gf::prime_power_decompose(q).first == 0) {
        res.reason = "q = " + std::to_string(q) + " is not a prime power";
        return res;
    }
    if (q > gf::kMaxOrder) {
        res.reason = "q = " + std::to_string(q) + " exceeds the field cap " + std::to_string(gf::kMaxOrder);
        return res;
    }
    if (n < 1 || dz < 1 || dx < 1 || j < 0) {
        res.reason = "n, dz, dx must be positive and j nonnegative";
        return res;
    }
    if (n > kMaxExistsLength) {
        res.reason = "length above the supported maximum " + std::to_string(kMaxExistsLength);
        return res;
    }

    std::vector<Candidate> cands;
    if (n >= 2) candidates_at(q, n, cands);
    const ClosedForm want{n, j, std::max(dz, dx), std::min(dz, dx)};
    std::vector<Candidate> hits;
    for (Candidate& c : cands)
        if (key_of(c.cf) == key_of(want)) hits.push_back(std::move(c));

    if (hits.empty()) {
        if (n > max_length(q))
            res.reason = q % 2 == 1 ? "length exceeds q+1 for odd q" : "length exceeds q+2 for even q";
        else
            res.reason = "no admissible case for [[" + std::to_string(n) + "," + std::to_string(j) + "," +
                         std::to_string(want.dz) + "/" + std::to_string(want.dx) + "]]_" + std::to_string(q);
        return res;
    }
    Certificate cert = group(q, std::move(hits)).front();
    mark_closed_form(cert);
    if (level == VerifyLevel::full_oracle) cert = replay(cert).certificate;
    res.exists = true;
    res.certificate = std::move(cert);
    return res;
}

namespace {

Json points_json(const std::vector<int>& xs) { return xs.empty() ? Json("default") : Json(xs); }

std::vector<int> points_from(const Json& j, const char* key) {
    if (!j.contains(key)) return {};
    const Json& v = j.at(key);
    if (v.is_string()) {
        if (v.get<std::string>() != "default") invalid(std::string(key) + " must be \"default\" or an array");
        return {};
    }
    if (!v.is_array()) invalid(std::string(key) + " must be \"default\" or an array");
    return v.get<std::vector<int>>();
}

template <class T>
T field_of(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) invalid(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        invalid(std::string("field \"") + key + "\" has the wrong type");
    }
}

}  // namespace

Json to_json(const Recipe& r) {
    Json j;
    j["family"] = family_tag(r.family);
    j["q"] = r.q;
    j["n"] = r.n;
    j["k"] = r.k;
    j["j"] = r.j;
    j["r"] = r.r;
    j["alpha"] = points_json(r.alpha);
    j["v"] = points_json(r.v);
    if (r.family == Family::th8) j["irreducible"] = points_json(r.irreducible);
    if (r.source) {
        Json s;
        s["kind"] = source_tag(r.source->kind);
        s["n"] = r.source->n;
        s["k"] = r.source->k;
        s["alpha"] = points_json(r.source->alpha);
        s["v"] = points_json(r.source->v);
        j["source"] = std::move(s);
    }
    if (r.codeword) j["codeword"] = *r.codeword;
    return j;
}

Recipe recipe_from_json(const Json& j) {
    Recipe r;
    const auto fam = parse_family(field_of<std::string>(j, "family"));
    if (!fam) invalid("unknown family tag");
    r.family = *fam;
    r.q = field_of<int>(j, "q");
    r.n = field_of<int>(j, "n");
    r.k = field_of<int>(j, "k");
    r.j = field_of<int>(j, "j");
    r.r = j.contains("r") ? field_of<int>(j, "r") : 0;
    try {
        r.alpha = points_from(j, "alpha");
        r.v = points_from(j, "v");
        r.irreducible = points_from(j, "irreducible");
        if (j.contains("codeword")) r.codeword = j.at("codeword").get<std::vector<int>>();
        if (j.contains("source")) {
            const Json& s = j.at("source");
            const auto kind = parse_source(field_of<std::string>(s, "kind"));
            if (!kind) invalid("unknown source kind");
            CodeSource src;
            src.kind = *kind;
            src.n = field_of<int>(s, "n");
            src.k = field_of<int>(s, "k");
            src.alpha = points_from(s, "alpha");
            src.v = points_from(s, "v");
            r.source = std::move(src);
        }
    } catch (const nlohmann::json::exception& e) {
        invalid(std::string("malformed recipe: ") + e.what());
    }
    return r;
}

Json to_json(const Certificate& c) {
    Json j;
    j["q"] = c.q;
    j["n"] = c.n;
    j["j"] = c.j;
    j["dz"] = c.dz;
    j["dx"] = c.dx;
    j["pure"] = c.pure;
    j["aqmds"] = c.aqmds;
    Json fams = Json::array();
    for (Family f : c.families) fams.push_back(family_tag(f));
    j["family"] = std::move(fams);
    j["recipe"] = to_json(c.recipe);
    j["verified"] = c.verified;
    j["oracle_log"] = c.oracle_log;
    if (c.diff_weights) j["diff_weights"] = {c.diff_weights->first, c.diff_weights->second};
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.q = field_of<int>(j, "q");
    c.n = field_of<int>(j, "n");
    c.j = field_of<int>(j, "j");
    c.dz = field_of<int>(j, "dz");
    c.dx = field_of<int>(j, "dx");
    c.pure = field_of<bool>(j, "pure");
    c.aqmds = field_of<bool>(j, "aqmds");
    for (const std::string& tag : field_of<std::vector<std::string>>(j, "family")) {
        const auto f = parse_family(tag);
        if (!f) invalid("unknown family tag " + tag);
        c.families.push_back(*f);
    }
    if (!j.contains("recipe")) invalid("missing field \"recipe\"");
    c.recipe = recipe_from_json(j.at("recipe"));
    c.verified = j.contains("verified") ? field_of<bool>(j, "verified") : false;
    if (j.contains("oracle_log")) c.oracle_log = field_of<std::vector<std::string>>(j, "oracle_log");
    if (j.contains("diff_weights")) {
        const auto w = field_of<std::vector<int>>(j, "diff_weights");
        if (w.size() != 2) invalid("diff_weights must have two entries");
        c.diff_weights = std::make_pair(w[0], w[1]);
    }
    return c;
}

}  // namespace aqmds::catalog
