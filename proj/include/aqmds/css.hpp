#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqmds/code.hpp"

namespace aqmds::css {

using code::LinearCode;

/// Parameters [[n, k, dz/dx]]_q of an asymmetric CSS code, dz >= dx.
struct AqcParams {
    int q = 0;
    int n = 0;
    int k = 0;  // quantum dimension exponent, k1 + k2 - n
    int dz = 0;
    int dx = 0;
    bool pure = false;
    bool aqmds = false;

    // Classical side: minimum distances of C1 and C2, and the two set-difference
    // weights wt(C2 \ C1^perp), wt(C1 \ C2^perp) (absent when k = 0).
    int d1 = 0;
    int d2 = 0;
    std::optional<int> wt_c2_minus_c1perp;
    std::optional<int> wt_c1_minus_c2perp;

    /// "[[n,k,dz/dx]]_q"
    std::string to_string() const;
};

/// k <= n - dx - dz + 2.
bool singleton_holds(const AqcParams& p) noexcept;
bool singleton_tight(const AqcParams& p) noexcept;

/// A pair (C1, C2) with C1^perp contained in C2 (hence C2^perp in C1).
class NestedPair {
public:
    const LinearCode& c1() const noexcept { return c1_; }
    const LinearCode& c2() const noexcept { return c2_; }
    const LinearCode& c1_dual() const noexcept { return c1_dual_; }
    const LinearCode& c2_dual() const noexcept { return c2_dual_; }
    int quantum_dimension() const noexcept { return c1_.k() + c2_.k() - c1_.n(); }

private:
    friend NestedPair make_pair(LinearCode c1, LinearCode c2);
    NestedPair(LinearCode c1, LinearCode c2, LinearCode c1d, LinearCode c2d);

    LinearCode c1_, c2_, c1_dual_, c2_dual_;
};

/// Throws Error(not_nested) naming a row of C1^perp outside C2, or
/// field/length mismatch errors.
NestedPair make_pair(LinearCode c1, LinearCode c2);

/// Exact dz/dx as the max/min of the two set-difference weights. When
/// C1^perp = C2 (k = 0) the distances of C1 and C2 are used and the code is
/// pure by convention. Defaults to whichever exact weight method is cheaper.
AqcParams css_construct(const NestedPair& pair,
                        const code::EnumOptions& opts = {code::default_enumeration_cap(),
                                                         code::DistanceMethod::automatic});

struct FullWeightCss {
    AqcParams params;
    NestedPair pair;
    std::vector<gf::Element> codeword;
};

/// The pair (<u>^perp, C) for a full-weight codeword u of C, giving an
/// [[n, k-1, d/2]] code. Throws Error(dimension_too_small) for k < 2 and
/// Error(no_full_weight_word) when C has no codeword of weight n.
FullWeightCss from_full_weight(const LinearCode& c,
                               const code::EnumOptions& opts = {code::default_enumeration_cap(),
                                                                code::DistanceMethod::automatic});

}  // namespace aqmds::css
