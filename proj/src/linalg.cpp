#include "hkrr/linalg.hpp"

#include <string>
#include <utility>

namespace hkrr {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::vector<std::vector<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows.front().size();
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
        for (auto& x : r) data_.push_back(std::move(x));
    }
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return {first, first + static_cast<std::ptrdiff_t>(cols_)};
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

RowEchelon row_reduce(RationalMatrix m) {
    RowEchelon out;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead_row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
        }
        Rational inv = m(lead_row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col).is_zero()) continue;
            Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(lead_row, c);
        }
        out.pivot_cols.push_back(col);
        ++lead_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

std::vector<std::vector<Rational>> null_space(const RationalMatrix& m) {
    RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

SingularSystemError::SingularSystemError(std::size_t r, std::size_t n)
    : std::runtime_error("linear system has rank " + std::to_string(r) + " < " + std::to_string(n) +
                         " unknowns; solution is not unique"),
      rank(r),
      unknowns(n) {}

std::vector<Rational> solve_unique(const RationalMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_unique: rhs length mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    RowEchelon e = row_reduce(std::move(aug));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) {
        throw InconsistentSystemError("linear system is inconsistent");
    }
    if (e.rank() < a.cols()) throw SingularSystemError(e.rank(), a.cols());
    std::vector<Rational> x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) x[i] = e.reduced(i, a.cols());
    return x;
}

}  // namespace hkrr
