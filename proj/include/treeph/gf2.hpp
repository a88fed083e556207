#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "treeph/simplex.hpp"

namespace treeph {

/// Dense bit vector with word-wise XOR, used as the working row set
/// during elimination.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
    void clear();
    bool any() const;

    void xor_with(const BitVec& other);
    void xor_sparse(const std::vector<Index>& idx);

    /// Largest set bit index, or -1 when empty.
    long long highest() const;

    std::vector<Index> to_sparse() const;
    std::size_t count() const;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Sparse matrix over GF(2); columns are sorted sets of row indices.
/// Column addition is symmetric difference.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(Index n_rows, Index n_cols)
        : rows_(n_rows), cols_(n_cols), cols_storage_(n_cols) {}

    Index n_rows() const { return rows_; }
    Index n_cols() const { return cols_; }

    const std::vector<Index>& column(Index c) const { return cols_storage_[c]; }
    void set_column(Index c, std::vector<Index> sorted_rows);
    bool entry(Index r, Index c) const;

    static Gf2Matrix identity(Index n);

    /// Matrix product over GF(2) (test support for solve round trips).
    Gf2Matrix multiply(const Gf2Matrix& rhs) const;

    bool operator==(const Gf2Matrix&) const = default;

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<std::vector<Index>> cols_storage_;
};

struct ReductionResult {
    Index rank = 0;
    std::vector<Index> pivot_cols;       // in processing order
    std::map<Index, Index> pivot_row_of; // pivot column -> its pivot row
    std::vector<Index> zero_cols;        // in processing order
};

/// Incremental column eliminator. Processes columns one at a time with
/// pivot row = largest-index nonzero row, retaining per-pivot reduction
/// records so later right-hand sides can be solved against the same
/// elimination (Eq.-style reuse: one reduction, many right-hand sides).
class Gf2Eliminator {
public:
    explicit Gf2Eliminator(Index n_rows, bool track_combinations = false);

    /// Reduces the column against current pivots. If independent, it
    /// becomes pivot number `ordinal()` and its pivot row is returned;
    /// otherwise nullopt (column reduced to zero).
    std::optional<Index> add_column(const std::vector<Index>& sorted_rows);

    /// Number of pivot columns added so far.
    Index rank() const { return static_cast<Index>(records_.size()); }

    /// Expresses rhs as a combination of previously added pivot columns.
    /// Returns the sorted ordinals of those columns, or nullopt when rhs
    /// is not in their span. Requires track_combinations.
    std::optional<std::vector<Index>> solve(const std::vector<Index>& rhs_sorted_rows) const;

    /// Reduces rhs in place against current pivots and reports whether a
    /// nonzero residue remains (i.e. rhs independent of the span).
    bool reduces_to_zero(const std::vector<Index>& rhs_sorted_rows) const;

private:
    struct Record {
        std::vector<Index> reduced;     // sparse reduced column
        std::vector<Index> combination; // sparse, over pivot ordinals
    };

    Index n_rows_;
    bool track_;
    std::vector<long long> pivot_of_row_; // row -> record index, -1 if none
    std::vector<Record> records_;
    mutable BitVec work_;
    mutable BitVec comb_;
};

/// Processes the columns of M in the given order (a permutation of
/// 0..n_cols-1). Rank, the pivot/zero split, and each pivot's row are
/// reported; the rank is order invariant.
ReductionResult gf2_reduce(const Gf2Matrix& M, std::span<const Index> column_order);
ReductionResult gf2_reduce(const Gf2Matrix& M);

/// Solves A X = B over GF(2) for A with linearly independent columns and
/// every column of B in the span of A's columns. Throws NotFullRank or
/// NotInSpan otherwise.
Gf2Matrix gf2_solve(const Gf2Matrix& A, const Gf2Matrix& B);

} // namespace treeph
