#include "aqmds/gf.hpp"

#include <array>
#include <mutex>
#include <string>

#include "aqmds/error.hpp"

namespace aqmds::gf {

namespace {

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using IntPoly = std::vector<int>;

void trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod_p(int a, int p) {
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    return 0;
}

// Remainder of a modulo b over GF(p); b nonzero.
IntPoly mod_p(IntPoly a, const IntPoly& b, int p) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    const int lead_inv = inv_mod_p(b.back(), p);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const int factor = a.back() * lead_inv % p;
        for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

IntPoly from_digits(int value, int p, int len) {
    IntPoly out(len);
    for (int i = 0; i < len; ++i) {
        out[i] = value % p;
        value /= p;
    }
    return out;
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible_over_prime(const IntPoly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        const int count = ipow(p, d);
        for (int low = 0; low < count; ++low) {
            IntPoly g = from_digits(low, p, d);
            g.push_back(1);
            if (mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

IntPoly smallest_irreducible(int p, int m) {
    const int count = ipow(p, m);
    for (int low = 0; low < count; ++low) {
        IntPoly f = from_digits(low, p, m);
        f.push_back(1);
        if (irreducible_over_prime(f, p)) return f;
    }
    return {};  // unreachable: irreducibles exist in every degree
}

}  // namespace

std::pair<int, int> prime_power_decompose(int q) noexcept {
    if (q < 2) return {0, 0};
    int p = 0;
    for (int d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return {0, 0};
    return {p, m};
}

FieldPtr make_field(int q) {
    if (q < 2) throw Error(Errc::not_prime_power, "field order must be at least 2, got " + std::to_string(q));
    const auto [p, m] = prime_power_decompose(q);
    if (p == 0) throw Error(Errc::not_prime_power, std::to_string(q) + " is not a prime power");
    if (q > kMaxOrder)
        throw Error(Errc::cap_exceeded,
                    "field order " + std::to_string(q) + " exceeds the cap of " + std::to_string(kMaxOrder));
    static std::mutex mu;
    static std::array<FieldPtr, kMaxOrder + 1> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[q]) cache[q] = FieldPtr(new FiniteField(p, m));
    return cache[q];
}

FiniteField::FiniteField(int p, int m) : p_(p), m_(m), q_(ipow(p, m)), modulus_(smallest_irreducible(p, m)) {
    const int q = q_;

    std::vector<IntPoly> digits(q);
    for (int i = 0; i < q; ++i) digits[i] = from_digits(i, p, m);
    auto to_index = [&](const IntPoly& a) {
        int v = 0;
        for (int i = m - 1; i >= 0; --i) v = v * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
        return v;
    };

    add_.resize(q * q);
    neg_.resize(q);
    for (int a = 0; a < q; ++a) {
        IntPoly n(m);
        for (int i = 0; i < m; ++i) n[i] = (p - digits[a][i]) % p;
        neg_[a] = static_cast<std::uint8_t>(to_index(n));
        for (int b = 0; b < q; ++b) {
            IntPoly s(m);
            for (int i = 0; i < m; ++i) s[i] = (digits[a][i] + digits[b][i]) % p;
            add_[a * q + b] = static_cast<std::uint8_t>(to_index(s));
        }
    }

    auto raw_mul = [&](int a, int b) {
        IntPoly prod(2 * m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
        return to_index(mod_p(prod, modulus_, p));
    };

    // Smallest primitive element.
    int gen = 1;
    for (int g = (q == 2 ? 1 : 2); g < q; ++g) {
        int x = 1;
        int order = 0;
        do {
            x = raw_mul(x, g);
            ++order;
        } while (x != 1);
        if (order == q - 1) {
            gen = g;
            break;
        }
    }

    exp_.resize(2 * (q - 1));
    log_.assign(q, -1);
    int x = 1;
    for (int i = 0; i < q - 1; ++i) {
        exp_[i] = static_cast<std::uint8_t>(x);
        exp_[i + q - 1] = static_cast<std::uint8_t>(x);
        log_[x] = i;
        x = raw_mul(x, gen);
    }

    mul_.assign(q * q, 0);
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b) mul_[a * q + b] = exp_[log_[a] + log_[b]];
}

void FiniteField::check(Element a) const {
    if (a.index >= q_)
        throw Error(Errc::field_mismatch,
                    "element " + std::to_string(a.index) + " does not belong to GF(" + std::to_string(q_) + ")");
}

Element FiniteField::element(int index) const {
    if (index < 0 || index >= q_)
        throw Error(Errc::field_mismatch,
                    "element " + std::to_string(index) + " does not belong to GF(" + std::to_string(q_) + ")");
    return Element{index};
}

Element FiniteField::add(Element a, Element b) const {
    check(a);
    check(b);
    return Element{add_[a.index * q_ + b.index]};
}

Element FiniteField::neg(Element a) const {
    check(a);
    return Element{neg_[a.index]};
}

Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FiniteField::mul(Element a, Element b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) return zero();
    return Element{exp_[log_[a.index] + log_[b.index]]};
}

Element FiniteField::inv(Element a) const {
    check(a);
    if (a.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
    return Element{exp_[(q_ - 1 - log_[a.index]) % (q_ - 1)]};
}

Element FiniteField::div(Element a, Element b) const { return mul(a, inv(b)); }

Element FiniteField::pow(Element a, long long e) const {
    check(a);
    if (a.is_zero()) {
        if (e < 0) throw Error(Errc::division_by_zero, "negative power of zero");
        return e == 0 ? one() : zero();
    }
    const long long order = q_ - 1;
    long long r = (static_cast<long long>(log_[a.index]) * (e % order)) % order;
    if (r < 0) r += order;
    return Element{exp_[r]};
}

int FiniteField::log(Element a) const {
    check(a);
    if (a.is_zero()) throw Error(Errc::division_by_zero, "logarithm of zero");
    return log_[a.index];
}

Element FiniteField::exp(long long e) const noexcept {
    const long long order = q_ - 1;
    long long r = e % order;
    if (r < 0) r += order;
    return Element{exp_[r]};
}

std::vector<Element> FiniteField::elements() const {
    std::vector<Element> out;
    out.reserve(q_);
    for (int i = 0; i < q_; ++i) out.emplace_back(i);
    return out;
}

ElementSums element_sums(const FiniteField& f) {
    ElementSums s;
    for (int i = 1; i < f.q(); ++i) {
        const Element a{i};
        s.sum = f.add(s.sum, a);
        s.inverse_sum = f.add(s.inverse_sum, f.inv(a));
        s.square_sum = f.add(s.square_sum, f.mul(a, a));
    }
    return s;
}

}  // namespace aqmds::gf
