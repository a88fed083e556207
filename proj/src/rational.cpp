#include "treeph/rational.hpp"

#include <utility>

#include "treeph/errors.hpp"

namespace treeph {

RationalMatrix RationalMatrix::identity(Index n) {
    RationalMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (Index r = 0; r < rows_; ++r)
        for (Index c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("rational multiply shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (Index r = 0; r < rows_; ++r)
        for (Index k = 0; k < cols_; ++k) {
            const BigRat& x = at(r, k);
            if (x == 0) continue;
            for (Index c = 0; c < rhs.cols_; ++c) {
                const BigRat& y = rhs.at(k, c);
                if (y != 0) out.at(r, c) += x * y;
            }
        }
    return out;
}

Index rational_rank(const RationalMatrix& M) {
    Index rows = M.n_rows(), cols = M.n_cols();
    if (rows == 0 || cols == 0) return 0;
    // Scale each row to integers, then run fraction-free elimination.
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (Index r = 0; r < rows; ++r) {
        BigInt lcm = 1;
        for (Index c = 0; c < cols; ++c) {
            const BigInt den = boost::multiprecision::denominator(M.at(r, c));
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        for (Index c = 0; c < cols; ++c) {
            BigRat scaled = M.at(r, c) * lcm;
            a[r][c] = boost::multiprecision::numerator(scaled);
        }
    }
    Index rank = 0;
    BigInt prev = 1;
    for (Index c = 0; c < cols && rank < rows; ++c) {
        Index pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (Index r = rank + 1; r < rows; ++r) {
            for (Index j = c + 1; j < cols; ++j)
                a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

RationalMatrix rational_solve(const RationalMatrix& A, const RationalMatrix& B) {
    if (A.n_rows() != A.n_cols()) throw DimensionError("rational solve needs square A");
    if (A.n_rows() != B.n_rows()) throw DimensionError("rational solve shape mismatch");
    Index n = A.n_rows(), w = B.n_cols();
    RationalMatrix a = A, x = B;
    for (Index c = 0; c < n; ++c) {
        Index pivot = c;
        while (pivot < n && a.at(pivot, c) == 0) ++pivot;
        if (pivot == n) throw Singular("matrix is singular");
        if (pivot != c) {
            for (Index j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(pivot, j));
            for (Index j = 0; j < w; ++j) std::swap(x.at(c, j), x.at(pivot, j));
        }
        BigRat inv = a.at(c, c);
        for (Index j = c; j < n; ++j) a.at(c, j) /= inv;
        for (Index j = 0; j < w; ++j) x.at(c, j) /= inv;
        for (Index r = 0; r < n; ++r) {
            if (r == c) continue;
            BigRat f = a.at(r, c);
            if (f == 0) continue;
            for (Index j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
            for (Index j = 0; j < w; ++j) x.at(r, j) -= f * x.at(c, j);
        }
    }
    return x;
}

} // namespace treeph
