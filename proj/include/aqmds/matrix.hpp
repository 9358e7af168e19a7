#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aqmds/gf.hpp"

namespace aqmds::linalg {

using gf::Element;
using gf::FieldPtr;

/// Dense row-major matrix over GF(q). Holds a shared handle to its field.
class GfMatrix {
public:
    GfMatrix(FieldPtr field, std::size_t rows, std::size_t cols);

    /// Builds from element indices; throws Error(field_mismatch) on an index
    /// outside the field and Error(dimension_mismatch) on ragged rows.
    static GfMatrix from_ints(FieldPtr field, const std::vector<std::vector<int>>& rows);
    static GfMatrix from_rows(FieldPtr field, std::size_t cols, const std::vector<std::vector<Element>>& rows);
    static GfMatrix identity(FieldPtr field, std::size_t n);

    const gf::FiniteField& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::span<const Element> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

    /// Row-major element indices, the layout the kernels consume.
    std::vector<std::uint8_t> raw() const;
    std::vector<std::vector<int>> to_ints() const;

    bool is_zero() const noexcept;
    GfMatrix select_columns(std::span<const std::size_t> columns) const;
    GfMatrix remove_column(std::size_t column) const;
    GfMatrix take_rows(std::size_t count) const;

    bool operator==(const GfMatrix& o) const noexcept;

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

struct RrefResult {
    GfMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by plain Gauss-Jordan elimination, scanning
/// columns left to right and taking the first nonzero pivot top to bottom.
RrefResult rref(const GfMatrix& m);
std::size_t rank(const GfMatrix& m);

/// Basis (as rows) of {x : M x^T = 0}; cols - rank(M) rows.
GfMatrix nullspace(const GfMatrix& m);

/// Throws Error(dimension_mismatch) or Error(field_mismatch).
GfMatrix mat_mul(const GfMatrix& a, const GfMatrix& b);
GfMatrix transpose(const GfMatrix& a);

/// True iff every k x k column minor is nonsingular (M has k rows of rank k).
/// Throws Error(rank_deficient) if rank(M) < k, Error(dimension_mismatch) if rows != k.
bool all_k_subsets_nonsingular(const GfMatrix& m, std::size_t k);

/// Lexicographically first singular k-column minor, if any.
std::optional<std::vector<int>> first_singular_subset(const GfMatrix& m, std::size_t k);

std::string to_string(const GfMatrix& m);

}  // namespace aqmds::linalg
