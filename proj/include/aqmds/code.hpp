#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aqmds/matrix.hpp"

namespace aqmds::code {

using gf::Element;
using gf::FieldPtr;
using linalg::GfMatrix;

/// Enumeration budget: 10^7 codewords, or the value of AQMDS_MAX_ENUM when set.
std::uint64_t default_enumeration_cap();

/// How exact weights are computed.
///  - enumerate: walk all q^k codewords (refuses above the cap).
///  - support:   walk coordinate subsets of increasing size and solve for
///               codewords supported there; cost is independent of k.
///  - automatic: whichever is estimated cheaper.
enum class DistanceMethod { enumerate, support, automatic };

struct EnumOptions {
    std::uint64_t cap = default_enumeration_cap();
    DistanceMethod method = DistanceMethod::enumerate;
};

/// An [n,k]_q linear code. The generator is kept in reduced row echelon form,
/// so two codes are equal iff their generators are identical.
class LinearCode {
public:
    /// Canonicalizes by RREF and drops zero rows. Throws Error(zero_code) on rank 0.
    static LinearCode from_generator(const GfMatrix& m);
    static LinearCode zero(FieldPtr field, int n);
    static LinearCode full_space(FieldPtr field, int n);

    const gf::FiniteField& field() const noexcept { return g_.field(); }
    const FieldPtr& field_ptr() const noexcept { return g_.field_ptr(); }
    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const GfMatrix& generator() const noexcept { return g_; }
    const GfMatrix& parity_check() const noexcept { return h_; }

    bool contains(std::span<const Element> word) const;
    std::vector<Element> encode(std::span<const Element> message) const;

    /// "[n,k]_q"
    std::string to_string() const;

    bool operator==(const LinearCode& o) const noexcept { return g_ == o.g_; }

private:
    LinearCode(GfMatrix g, GfMatrix h);

    GfMatrix g_;
    GfMatrix h_;
    int n_;
    int k_;
};

struct WeightReport {
    int min_weight = 0;
    std::optional<std::vector<Element>> full_weight_codeword;
    std::optional<std::vector<std::uint64_t>> distribution;  // A_0..A_n
};

LinearCode dual(const LinearCode& c);

/// Exact minimum distance. With the default options this enumerates all q^k
/// codewords and throws Error(cap_exceeded) above the cap; use is_mds for
/// high-dimensional MDS checks, or DistanceMethod::support.
int min_distance(const LinearCode& c, const EnumOptions& opts = {});

/// Every k columns of the generator independent (k-subset oracle).
bool is_mds(const LinearCode& c);

/// min{wt(u) : u in C \ D}. Requires D a strict subcode of C
/// (Error(not_strict_subcode)). Enumeration filters C by D's parity check.
int weight_of_difference(const LinearCode& c, const LinearCode& d, const EnumOptions& opts = {});

/// D subset of C. Throws Error(field_mismatch) / Error(length_mismatch).
bool is_subcode(const LinearCode& d, const LinearCode& c);

/// Codewords vanishing at pos, with that coordinate deleted.
LinearCode shorten(const LinearCode& c, int pos);
/// Coordinate pos deleted from every codeword.
LinearCode puncture(const LinearCode& c, int pos);

/// From nested MDS codes C < C' of dimensions k, k+1 and length n, builds the
/// [n+1, k+1, n-k+1] MDS code generated by [[0 | G], [1 | w]], w the first
/// codeword of C' (message order) outside C. The new coordinate is position 0.
LinearCode extend_by_codeword(const LinearCode& c, const LinearCode& c_prime);

/// First codeword of weight n in message order, if any.
std::optional<std::vector<Element>> full_weight_codeword(const LinearCode& c,
                                                         std::uint64_t cap = default_enumeration_cap());

WeightReport weight_distribution(const LinearCode& c, std::uint64_t cap = default_enumeration_cap());

}  // namespace aqmds::code
