#pragma once

// Per-item work shared by the serial and OpenMP kernels.

#include <cstdint>
#include <vector>

#include "aqmds/kernels.hpp"

namespace aqmds::kernels::detail {

// True iff the rows x rows minor on `cols` is singular.
bool minor_singular(const gf::FiniteField& f, std::span<const std::uint8_t> m, int rows, int total_cols,
                    const std::vector<int>& cols, std::vector<std::uint8_t>& scratch);

// True iff some codeword of C supported inside `support` lies outside D.
bool support_has_witness(const SupportQuery& query, const std::vector<int>& support,
                         std::vector<std::uint8_t>& scratch, std::vector<std::uint8_t>& vec);

// Next k-subset in lexicographic order; false after the last one.
bool next_combination(std::vector<int>& c, int n);

}  // namespace aqmds::kernels::detail
