#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hkrr/rational.hpp"

namespace hkrr {

/// Row-major dense matrix over Rational.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    explicit RationalMatrix(std::vector<std::vector<Rational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    RationalMatrix transposed() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    RationalMatrix reduced;              // reduced row echelon form
    std::vector<std::size_t> pivot_cols;  // one per nonzero row, increasing
    std::size_t rank() const { return pivot_cols.size(); }
};

/// Exact Gauss-Jordan elimination. The first nonzero entry in the column is
/// taken as pivot; over the rationals no numerical pivoting is needed.
RowEchelon row_reduce(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& m);

class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError(std::size_t rank, std::size_t unknowns);
    std::size_t rank;
    std::size_t unknowns;
};

class InconsistentSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unique solution of a x = b. Throws InconsistentSystemError when no
/// solution exists and SingularSystemError when it is not unique.
std::vector<Rational> solve_unique(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace hkrr
