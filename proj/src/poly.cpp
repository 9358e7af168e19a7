#include "aqmds/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "aqmds/error.hpp"

namespace aqmds::gf {

namespace {

// Trial division visits sum_{d<=deg/2} q^d divisors; past this many we switch to Ben-Or.
constexpr double kTrialDivisionBudget = 5.0e3;

Poly monic_from_counter(const std::vector<int>& low) {
    Poly g;
    g.reserve(low.size() + 1);
    for (int c : low) g.emplace_back(c);
    g.push_back(Element{1});
    return g;
}

// Advances a base-q odometer (digit 0 fastest); returns false on wrap-around.
bool advance(std::vector<int>& digits, int q) {
    for (int& d : digits) {
        if (++d < q) return true;
        d = 0;
    }
    return false;
}

Poly x_poly() { return Poly{Element{0}, Element{1}}; }

Poly poly_powmod(const FiniteField& f, Poly base, long long e, const Poly& mod) {
    Poly result{f.one()};
    base = poly_mod(f, base, mod);
    while (e > 0) {
        if (e & 1) result = poly_mod(f, poly_mul(f, result, base), mod);
        base = poly_mod(f, poly_mul(f, base, base), mod);
        e >>= 1;
    }
    return result;
}

}  // namespace

int degree(const Poly& a) noexcept { return static_cast<int>(a.size()) - 1; }

void trim(Poly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly poly_add(const FiniteField& f, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Element x = i < a.size() ? a[i] : f.zero();
        const Element y = i < b.size() ? b[i] : f.zero();
        out[i] = f.add(x, y);
    }
    trim(out);
    return out;
}

Poly poly_sub(const FiniteField& f, const Poly& a, const Poly& b) {
    Poly nb(b.size());
    std::transform(b.begin(), b.end(), nb.begin(), [&](Element e) { return f.neg(e); });
    return poly_add(f, a, nb);
}

Poly poly_mul(const FiniteField& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

Poly poly_mod(const FiniteField& f, const Poly& a, const Poly& b) {
    Poly bb = b;
    trim(bb);
    if (bb.empty()) throw Error(Errc::division_by_zero, "polynomial division by zero");
    Poly r = a;
    trim(r);
    const int db = degree(bb);
    const Element lead_inv = f.inv(bb.back());
    while (!r.empty() && degree(r) >= db) {
        const int shift = degree(r) - db;
        const Element factor = f.mul(r.back(), lead_inv);
        for (int i = 0; i <= db; ++i) r[shift + i] = f.sub(r[shift + i], f.mul(factor, bb[i]));
        trim(r);
    }
    return r;
}

Poly poly_gcd(const FiniteField& f, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Element inv = f.inv(a.back());
        for (Element& c : a) c = f.mul(c, inv);
    }
    return a;
}

Element poly_eval(const FiniteField& f, const Poly& a, Element x) {
    Element acc = f.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

bool has_root(const FiniteField& f, const Poly& a) {
    for (int i = 0; i < f.q(); ++i)
        if (poly_eval(f, a, Element{i}).is_zero()) return true;
    return false;
}

bool is_irreducible_trial_division(const FiniteField& f, const Poly& a) {
    Poly p = a;
    trim(p);
    const int deg = degree(p);
    if (deg < 1) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::vector<int> low(d, 0);
        do {
            if (poly_mod(f, p, monic_from_counter(low)).empty()) return false;
        } while (advance(low, f.q()));
    }
    return true;
}

bool is_irreducible_ben_or(const FiniteField& f, const Poly& a) {
    Poly p = a;
    trim(p);
    const int deg = degree(p);
    if (deg < 1) return false;
    if (deg == 1) return true;
    const Poly x = x_poly();
    Poly h = poly_mod(f, x, p);
    for (int i = 1; 2 * i <= deg; ++i) {
        h = poly_powmod(f, h, f.q(), p);
        const Poly g = poly_gcd(f, poly_sub(f, h, x), p);
        if (degree(g) > 0) return false;
    }
    return true;
}

bool is_irreducible(const FiniteField& f, const Poly& a) {
    Poly p = a;
    trim(p);
    const int deg = degree(p);
    if (deg < 1) return false;
    if (deg == 1) return true;
    if (has_root(f, p)) return false;
    if (deg <= 3) return true;
    double divisors = 0;
    double term = 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        term *= f.q();
        divisors += term;
    }
    if (divisors <= kTrialDivisionBudget) return is_irreducible_trial_division(f, p);
    return is_irreducible_ben_or(f, p);
}

Poly find_irreducible(const FiniteField& f, int deg) {
    if (deg < 1) throw Error(Errc::invalid_range, "irreducible polynomial degree must be >= 1, got " + std::to_string(deg));
    static std::mutex mu;
    static std::map<std::pair<int, int>, Poly> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({f.q(), deg});
        if (it != memo.end()) return it->second;
    }
    std::vector<int> low(deg, 0);
    do {
        Poly cand = monic_from_counter(low);
        if (is_irreducible(f, cand)) {
            std::lock_guard<std::mutex> lock(mu);
            memo.emplace(std::make_pair(f.q(), deg), cand);
            return cand;
        }
    } while (advance(low, f.q()));
    throw Error(Errc::precondition_failed, "no irreducible polynomial found");  // unreachable
}

}  // namespace aqmds::gf
