#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace aqmds::gf {

/// Largest field order the library constructs.
inline constexpr int kMaxOrder = 64;

/// Field element in the polynomial basis: the base-p digits of `index` are the
/// coefficients of the residue polynomial, lowest degree first. Index 0 is the
/// additive identity and index 1 the multiplicative identity.
struct Element {
    std::uint8_t index = 0;

    constexpr Element() = default;
    constexpr explicit Element(int i) : index(static_cast<std::uint8_t>(i)) {}

    constexpr bool is_zero() const { return index == 0; }
    constexpr int value() const { return index; }
    friend constexpr auto operator<=>(Element, Element) = default;
};

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// GF(q) for a prime power q <= 64. The defining modulus is the
/// lexicographically smallest monic irreducible polynomial of degree m over
/// GF(p), so repeated calls produce identical fields.
///
/// Throws Error(not_prime_power) or Error(cap_exceeded).
FieldPtr make_field(int q);

/// Decomposes q = p^m; returns {0, 0} when q is not a prime power.
std::pair<int, int> prime_power_decompose(int q) noexcept;

class FiniteField {
public:
    int p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    int q() const noexcept { return q_; }

    /// Monic degree-m modulus over GF(p), lowest degree first.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }
    /// Smallest-index primitive element.
    Element generator() const noexcept { return Element{exp_[1]}; }

    /// Checked conversion; throws Error(field_mismatch) if index is outside [0, q).
    Element element(int index) const;
    bool contains(Element a) const noexcept { return a.index < q_; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element div(Element a, Element b) const;
    Element pow(Element a, long long e) const;

    /// Discrete log to the base generator(); requires a != 0.
    int log(Element a) const;
    Element exp(long long e) const noexcept;

    /// All q elements in index order.
    std::vector<Element> elements() const;

    // Dense q*q tables, row-major, for the enumeration kernels.
    std::span<const std::uint8_t> add_table() const noexcept { return add_; }
    std::span<const std::uint8_t> mul_table() const noexcept { return mul_; }
    std::span<const std::uint8_t> neg_table() const noexcept { return neg_; }

    bool operator==(const FiniteField& o) const noexcept { return q_ == o.q_; }

private:
    friend FieldPtr make_field(int q);
    FiniteField(int p, int m);

    void check(Element a) const;

    int p_;
    int m_;
    int q_;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> exp_;  // length 2(q-1); exp_[i] = g^i
    std::vector<int> log_;           // log_[0] = -1
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
};

struct ElementSums {
    Element sum;          // sum of all nonzero a
    Element inverse_sum;  // sum of a^-1
    Element square_sum;   // sum of a^2
};

/// Sums over the q-1 nonzero elements. All three vanish in GF(2^m), m >= 2.
ElementSums element_sums(const FiniteField& f);

}  // namespace aqmds::gf
