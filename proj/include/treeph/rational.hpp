#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "treeph/simplex.hpp"

namespace treeph {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense matrix of exact rationals (arbitrary-precision numerator and
/// denominator, kept in lowest terms by the number type).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(Index n_rows, Index n_cols)
        : rows_(n_rows), cols_(n_cols), a_(std::size_t(n_rows) * n_cols) {}

    Index n_rows() const { return rows_; }
    Index n_cols() const { return cols_; }

    BigRat& at(Index r, Index c) { return a_[std::size_t(r) * cols_ + c]; }
    const BigRat& at(Index r, Index c) const { return a_[std::size_t(r) * cols_ + c]; }

    static RationalMatrix identity(Index n);
    RationalMatrix transposed() const;
    RationalMatrix multiply(const RationalMatrix& rhs) const;

    bool operator==(const RationalMatrix&) const = default;

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<BigRat> a_;
};

/// Exact rank over the rationals. Rows are scaled to integers, then
/// fraction-free (Bareiss) elimination keeps every intermediate an exact
/// minor of the scaled matrix.
Index rational_rank(const RationalMatrix& M);

/// Exact solution X of A X = B for square invertible A.
/// Throws Singular when det A = 0.
RationalMatrix rational_solve(const RationalMatrix& A, const RationalMatrix& B);

} // namespace treeph
