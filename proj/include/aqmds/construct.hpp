#pragma once

// Builders for the explicit MDS families: GRS codes, the doubly extended GRS
// code E of length q+1, the subcode of E cut out by an irreducible
// polynomial, and the two length-(q+2) codes over GF(2^m).
//
// Evaluation points default to 1, 2, ..., q-1, 0 (element indices, zero last)
// and column multipliers to all-ones. Custom points and multipliers are
// accepted everywhere.

#include <vector>

#include "aqmds/code.hpp"
#include "aqmds/poly.hpp"

namespace aqmds::construct {

using code::LinearCode;
using gf::Element;
using gf::FieldPtr;
using linalg::GfMatrix;

/// Nonzero elements in index order followed by 0.
std::vector<Element> default_points(const gf::FiniteField& f);
std::vector<Element> ones(int count);

struct GrsSpec {
    FieldPtr field;
    int n = 0;
    int k = 0;
    std::vector<Element> alpha;  // n distinct evaluation points
    std::vector<Element> v;      // n nonzero column multipliers

    static GrsSpec with_defaults(FieldPtr field, int n, int k);
};

/// Rows (v_j * alpha_j^i)_j for i = 0..k-1. Throws Error(invalid_spec).
GfMatrix grs_generator(const GrsSpec& spec);
LinearCode grs(const GrsSpec& spec);

struct ExtendedGrsSpec {
    FieldPtr field;
    int k = 0;
    std::vector<Element> alpha;  // q distinct points
    std::vector<Element> v;      // q+1 nonzero multipliers

    static ExtendedGrsSpec with_defaults(FieldPtr field, int k);
};

/// The [q+1, k, q-k+2] code {(v_1 f(a_1), ..., v_q f(a_q), v_{q+1} f_{k-1})}.
GfMatrix extended_grs_generator(const ExtendedGrsSpec& spec);
LinearCode extended_grs(const ExtendedGrsSpec& spec);

struct IrreducibleSubcode {
    LinearCode code;
    GfMatrix generator;  // rows v_j a_j^i p(a_j), last row carrying v_{q+1}
    gf::Poly irreducible;
};

/// The [q+1, r, q-r+2] subcode of extended_grs(spec) spanned by X^i p(X),
/// i < r, with p the smallest monic irreducible of degree k - r.
/// Throws Error(invalid_range) unless 1 <= r <= k-2.
IrreducibleSubcode grs_subcode_irreducible(const ExtendedGrsSpec& spec, int r);
/// Same with a caller-supplied p; throws Error(invalid_spec) unless p is monic
/// irreducible of degree k - r.
IrreducibleSubcode grs_subcode_with_polynomial(const ExtendedGrsSpec& spec, int r, const gf::Poly& p);

/// Shared data for the pair of length-(q+2) codes over GF(2^m). Both codes use
/// the same multipliers; the nesting depends on it.
struct QPlus2Spec {
    FieldPtr field;
    std::vector<Element> alpha;  // the q-1 nonzero points, alpha_q = 0 implied
    std::vector<Element> v;      // q+2 nonzero multipliers

    static QPlus2Spec with_defaults(FieldPtr field);
};

/// 3 x (q+2) parity check of the [q+2, q-1, 4] code.
GfMatrix q_plus_2_parity_check(const QPlus2Spec& spec);
/// 3 x (q+2) generator of the [q+2, 3, q] code (inverted entries).
GfMatrix q_plus_2_low_generator(const QPlus2Spec& spec);

/// [2^m+2, 2^m-1, 4]. Throws Error(not_char_two) or Error(degree_too_small).
LinearCode q_plus_2_high(const QPlus2Spec& spec);
/// [2^m+2, 3, 2^m], contained in q_plus_2_high of the same spec.
LinearCode q_plus_2_low(const QPlus2Spec& spec);

/// [n,1,n] with the all-ones generator.
LinearCode repetition(FieldPtr field, int n);
/// [n,n-1,2], the dual of repetition().
LinearCode dual_repetition(FieldPtr field, int n);

}  // namespace aqmds::construct
