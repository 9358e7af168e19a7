#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aqmds {

enum class Errc {
    not_prime_power,
    cap_exceeded,
    division_by_zero,
    field_mismatch,
    dimension_mismatch,
    rank_deficient,
    zero_code,
    not_strict_subcode,
    length_mismatch,
    position_out_of_range,
    precondition_failed,
    invalid_spec,
    invalid_range,
    not_char_two,
    degree_too_small,
    not_nested,
    degenerate_input,
    no_full_weight_word,
    dimension_too_small,
    recipe_invalid,
    verification_failed,
};

std::string_view errc_name(Errc e) noexcept;

/// Single exception type for the library; `kind()` identifies the failure.
class Error : public std::runtime_error {
public:
    Error(Errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Errc kind() const noexcept { return kind_; }

private:
    Errc kind_;
};

}  // namespace aqmds
