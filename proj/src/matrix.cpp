#include "aqmds/matrix.hpp"

#include <sstream>

#include "aqmds/error.hpp"
#include "aqmds/kernels.hpp"

namespace aqmds::linalg {

namespace {

void require_same_field(const GfMatrix& a, const GfMatrix& b) {
    if (!(a.field() == b.field()))
        throw Error(Errc::field_mismatch, "matrices over GF(" + std::to_string(a.field().q()) + ") and GF(" +
                                              std::to_string(b.field().q()) + ")");
}

}  // namespace

GfMatrix::GfMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

GfMatrix GfMatrix::from_ints(FieldPtr field, const std::vector<std::vector<int>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    GfMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(Errc::dimension_mismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = field->element(rows[r][c]);
    }
    return m;
}

GfMatrix GfMatrix::from_rows(FieldPtr field, std::size_t cols, const std::vector<std::vector<Element>>& rows) {
    GfMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(Errc::dimension_mismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!field->contains(rows[r][c])) throw Error(Errc::field_mismatch, "entry outside the field");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

GfMatrix GfMatrix::identity(FieldPtr field, std::size_t n) {
    GfMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Element{1};
    return m;
}

std::vector<std::uint8_t> GfMatrix::raw() const {
    std::vector<std::uint8_t> out(data_.size());
    for (std::size_t i = 0; i < data_.size(); ++i) out[i] = data_[i].index;
    return out;
}

std::vector<std::vector<int>> GfMatrix::to_ints() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).value();
    return out;
}

bool GfMatrix::is_zero() const noexcept {
    for (Element e : data_)
        if (!e.is_zero()) return false;
    return true;
}

GfMatrix GfMatrix::select_columns(std::span<const std::size_t> columns) const {
    GfMatrix out(field_, rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j] >= cols_) throw Error(Errc::position_out_of_range, "column index out of range");
            out(r, j) = (*this)(r, columns[j]);
        }
    return out;
}

GfMatrix GfMatrix::remove_column(std::size_t column) const {
    if (column >= cols_) throw Error(Errc::position_out_of_range, "column index out of range");
    GfMatrix out(field_, rows_, cols_ - 1);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0, j = 0; c < cols_; ++c)
            if (c != column) out(r, j++) = (*this)(r, c);
    return out;
}

GfMatrix GfMatrix::take_rows(std::size_t count) const {
    GfMatrix out(field_, count, cols_);
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    return out;
}

bool GfMatrix::operator==(const GfMatrix& o) const noexcept {
    return field() == o.field() && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RrefResult rref(const GfMatrix& m) {
    std::vector<std::uint8_t> raw = m.raw();
    const std::vector<int> piv = kernels::rref_raw(m.field(), raw.data(), static_cast<int>(m.rows()),
                                                   static_cast<int>(m.cols()));
    GfMatrix reduced(m.field_ptr(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = Element{raw[r * m.cols() + c]};
    return {std::move(reduced), std::vector<std::size_t>(piv.begin(), piv.end())};
}

std::size_t rank(const GfMatrix& m) { return rref(m).pivots.size(); }

GfMatrix nullspace(const GfMatrix& m) {
    const gf::FiniteField& f = m.field();
    const auto [reduced, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    GfMatrix basis(m.field_ptr(), m.cols() - pivots.size(), m.cols());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(out, free) = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(out, pivots[i]) = f.neg(reduced(i, free));
        ++out;
    }
    return basis;
}

GfMatrix mat_mul(const GfMatrix& a, const GfMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows())
        throw Error(Errc::dimension_mismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
    const gf::FiniteField& f = a.field();
    GfMatrix out(a.field_ptr(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Element acc = f.zero();
            for (std::size_t l = 0; l < a.cols(); ++l) acc = f.add(acc, f.mul(a(i, l), b(l, j)));
            out(i, j) = acc;
        }
    return out;
}

GfMatrix transpose(const GfMatrix& a) {
    GfMatrix out(a.field_ptr(), a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
    return out;
}

std::optional<std::vector<int>> first_singular_subset(const GfMatrix& m, std::size_t k) {
    if (m.rows() != k)
        throw Error(Errc::dimension_mismatch,
                    "expected " + std::to_string(k) + " rows, got " + std::to_string(m.rows()));
    if (rank(m) < k) throw Error(Errc::rank_deficient, "matrix rank is below " + std::to_string(k));
    const std::vector<std::uint8_t> raw = m.raw();
    return kernels::omp::first_singular_subset(m.field(), raw, static_cast<int>(k), static_cast<int>(m.cols()));
}

bool all_k_subsets_nonsingular(const GfMatrix& m, std::size_t k) { return !first_singular_subset(m, k).has_value(); }

std::string to_string(const GfMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).value();
        os << "]\n";
    }
    return os.str();
}

}  // namespace aqmds::linalg
