#pragma once

// Classification of pure CSS AQMDS parameters [[n, j, dz/dx]]_q, assuming the
// MDS conjecture, together with constructive, replayable certificates.
//
// Each admissible tuple is one row. A row lists every family that reaches it
// and carries one recipe: enough data to rebuild the classical pair exactly.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aqmds/css.hpp"

namespace aqmds::catalog {

enum class Family { prop5, prop6, th7, th8, cor10, th11, th12 };

/// "PROP5", "PROP6", "TH7", "TH8", "COR10", "TH11", "TH12".
std::string_view family_tag(Family f) noexcept;
/// Case-insensitive inverse of family_tag.
std::optional<Family> parse_family(std::string_view tag) noexcept;

/// A single classical MDS code used by the one-code families (PROP5, PROP6, TH12).
enum class SourceKind { repetition, dual_repetition, grs, extended_grs, qplus2_low, qplus2_high };

std::string_view source_tag(SourceKind s) noexcept;
std::optional<SourceKind> parse_source(std::string_view tag) noexcept;

struct CodeSource {
    SourceKind kind = SourceKind::repetition;
    int n = 0;
    int k = 0;
    std::vector<int> alpha;  // grs: n points; extended_grs: q; qplus2_*: q-1
    std::vector<int> v;      // grs: n; extended_grs: q+1; qplus2_*: q+2

    bool operator==(const CodeSource&) const = default;
};

/// Construction descriptor. Field elements are integer indices.
///   TH7:   C1 = GRS_{n,k}^perp, C2 = GRS_{n,k+j}        (alpha, v of length n)
///   TH8:   C1 = (E-subcode, r = k-j)^perp, C2 = E_k      (alpha: q, v: q+1, irreducible)
///   COR10: D = low length-(q+2) code; C1 = (D shortened at the last coordinate)^perp,
///          C2 = D punctured there                        (alpha: q-1, v: q+2)
///   TH11:  C1 = low^perp, C2 = high                     (alpha: q-1, v: q+2)
///   PROP5: C1 = source, C2 = F^n
///   PROP6: C1 = source^perp, C2 = source
///   TH12:  C1 = <u>^perp, C2 = source, u of full weight (searched when absent)
struct Recipe {
    Family family = Family::prop5;
    int q = 0;
    int n = 0;
    int k = 0;
    int j = 0;
    int r = 0;
    std::vector<int> alpha;
    std::vector<int> v;
    std::vector<int> irreducible;  // coefficients, low degree first; empty: smallest of degree j
    std::optional<CodeSource> source;
    std::optional<std::vector<int>> codeword;

    bool operator==(const Recipe&) const = default;
};

/// The MDS code of length n and dimension k used by the catalog: repetition /
/// dual repetition at the ends, then GRS (n <= q), extended GRS (n = q+1) or the
/// length-(q+2) pair. Empty when no such code is available.
std::optional<CodeSource> default_source(int q, int n, int k);

/// Recipe with default points and multipliers. The meaning of n, k, j follows
/// the family: TH7 uses all three, TH8 uses k and j, COR10 and TH11 only q,
/// and the one-code families take (n, k) as the source code.
/// Throws Error(recipe_invalid) when the family does not cover the input.
Recipe default_recipe(Family family, int q, int n, int k, int j);

/// Parameters promised by the family's closed form.
struct ClosedForm {
    int n = 0;
    int j = 0;
    int dz = 0;
    int dx = 0;
};

/// Throws Error(recipe_invalid) when the recipe is malformed for its family.
ClosedForm closed_form(const Recipe& recipe);

/// Rebuilds (C1, C2). Throws Error(recipe_invalid) on malformed input.
css::NestedPair build_pair(const Recipe& recipe);

enum class VerifyLevel { closed_form, full_oracle };

std::string_view verify_level_tag(VerifyLevel l) noexcept;
std::optional<VerifyLevel> parse_verify_level(std::string_view tag) noexcept;

struct Certificate {
    int q = 0;
    int n = 0;
    int j = 0;
    int dz = 0;
    int dx = 0;
    bool pure = false;
    bool aqmds = false;
    std::vector<Family> families;
    Recipe recipe;
    bool verified = false;
    std::vector<std::string> oracle_log;  // "name:pass", "name:fail", "name:skipped(reason)"
    // Set by full replay: wt(C2 \ C1^perp), wt(C1 \ C2^perp); absent when j = 0.
    std::optional<std::pair<int, int>> diff_weights;

    /// "[[n,j,dz/dx]]_q"
    std::string label() const;
};

/// Oracle names in replay order.
const std::vector<std::string>& oracle_names();

struct ReplayOutcome {
    Certificate certificate;                 // with refreshed oracle_log / verified
    std::optional<std::string> first_failure;  // name of the first failing oracle
};

/// Reruns every oracle against the claimed parameters. Never throws on a
/// failing oracle; throws Error(recipe_invalid) when the recipe cannot be built.
ReplayOutcome replay(const Certificate& cert,
                     const code::EnumOptions& opts = {code::default_enumeration_cap(),
                                                      code::DistanceMethod::automatic});

/// replay(), then Error(verification_failed) naming the first failing oracle.
/// Oracles skipped for budget reasons leave verified = false without throwing.
Certificate verify(const Certificate& cert,
                   const code::EnumOptions& opts = {code::default_enumeration_cap(),
                                                    code::DistanceMethod::automatic});

struct CatalogQuery {
    int q = 0;
    std::optional<int> n;
    std::optional<int> j;
    std::optional<int> dz;  // unordered with dx
    std::optional<int> dx;
    std::optional<int> min_dx;
    VerifyLevel level = VerifyLevel::closed_form;
};

/// Largest length the enumerator considers: q+1 for odd q, q+2 for even q.
int max_length(int q);

/// All admissible tuples for q matching the filters, sorted by (n, j, dz, dx).
/// Throws Error(not_prime_power) / Error(cap_exceeded) for unusable q and
/// Error(invalid_range) for filters outside 1 <= n <= max_length(q).
std::vector<Certificate> enumerate(const CatalogQuery& query);

struct ExistsResult {
    bool exists = false;
    std::string reason;  // set when exists is false
    std::optional<Certificate> certificate;
};

/// Largest length accepted by exists().
inline constexpr int kMaxExistsLength = 256;

/// Decision for one tuple, {dz, dx} unordered. Never throws for bad input;
/// the reason says why the answer is no.
ExistsResult exists(int q, int n, int j, int dz, int dx, VerifyLevel level = VerifyLevel::closed_form);

using Json = nlohmann::ordered_json;

/// Point and multiplier vectors left empty serialize as "default".
Json to_json(const Certificate& cert);
Json to_json(const Recipe& recipe);
/// Throws Error(recipe_invalid) on schema violations.
Certificate certificate_from_json(const Json& j);
Recipe recipe_from_json(const Json& j);

}  // namespace aqmds::catalog
