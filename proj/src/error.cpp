#include "aqmds/error.hpp"

namespace aqmds {

std::string_view errc_name(Errc e) noexcept {
    switch (e) {
        case Errc::not_prime_power: return "NotPrimePower";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::field_mismatch: return "FieldMismatch";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::rank_deficient: return "RankDeficient";
        case Errc::zero_code: return "ZeroCode";
        case Errc::not_strict_subcode: return "NotStrictSubcode";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::position_out_of_range: return "PositionOutOfRange";
        case Errc::precondition_failed: return "PreconditionFailed";
        case Errc::invalid_spec: return "InvalidSpec";
        case Errc::invalid_range: return "InvalidRange";
        case Errc::not_char_two: return "NotCharTwo";
        case Errc::degree_too_small: return "DegreeTooSmall";
        case Errc::not_nested: return "NotNested";
        case Errc::degenerate_input: return "DegenerateInput";
        case Errc::no_full_weight_word: return "NoFullWeightWord";
        case Errc::dimension_too_small: return "DimensionTooSmall";
        case Errc::recipe_invalid: return "RecipeInvalid";
        case Errc::verification_failed: return "VerificationFailed";
    }
    return "Unknown";
}

}  // namespace aqmds
