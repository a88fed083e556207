#include "treeph/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "treeph/errors.hpp"

namespace treeph {

void BitVec::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

bool BitVec::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

void BitVec::xor_with(const BitVec& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

void BitVec::xor_sparse(const std::vector<Index>& idx) {
    for (Index i : idx) words_[i >> 6] ^= std::uint64_t(1) << (i & 63);
}

long long BitVec::highest() const {
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w]) return static_cast<long long>(w * 64 + 63 - std::countl_zero(words_[w]));
    return -1;
}

std::vector<Index> BitVec::to_sparse() const {
    std::vector<Index> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(static_cast<Index>(w * 64 + b));
            word &= word - 1;
        }
    }
    return out;
}

std::size_t BitVec::count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
}

void Gf2Matrix::set_column(Index c, std::vector<Index> sorted_rows) {
    cols_storage_[c] = std::move(sorted_rows);
}

bool Gf2Matrix::entry(Index r, Index c) const {
    const auto& col = cols_storage_[c];
    return std::binary_search(col.begin(), col.end(), r);
}

Gf2Matrix Gf2Matrix::identity(Index n) {
    Gf2Matrix m(n, n);
    for (Index i = 0; i < n; ++i) m.set_column(i, {i});
    return m;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("gf2 multiply shape mismatch");
    Gf2Matrix out(rows_, rhs.cols_);
    BitVec acc(rows_);
    for (Index c = 0; c < rhs.cols_; ++c) {
        acc.clear();
        for (Index k : rhs.column(c)) acc.xor_sparse(column(k));
        out.set_column(c, acc.to_sparse());
    }
    return out;
}

Gf2Eliminator::Gf2Eliminator(Index n_rows, bool track_combinations)
    : n_rows_(n_rows), track_(track_combinations),
      pivot_of_row_(n_rows, -1), work_(n_rows), comb_(0) {}

std::optional<Index> Gf2Eliminator::add_column(const std::vector<Index>& sorted_rows) {
    work_.clear();
    work_.xor_sparse(sorted_rows);
    if (track_) {
        if (comb_.size() <= records_.size()) comb_ = BitVec(records_.size() + 64);
        comb_.clear();
    }
    long long low = work_.highest();
    while (low >= 0 && pivot_of_row_[low] >= 0) {
        Index rec = static_cast<Index>(pivot_of_row_[low]);
        work_.xor_sparse(records_[rec].reduced);
        if (track_) {
            // reduced(rec) = orig(rec) ^ combination(rec) over originals.
            comb_.flip(rec);
            comb_.xor_sparse(records_[rec].combination);
        }
        low = work_.highest();
    }
    if (low < 0) return std::nullopt;
    pivot_of_row_[low] = static_cast<long long>(records_.size());
    Record rec;
    rec.reduced = work_.to_sparse();
    if (track_) rec.combination = comb_.to_sparse();
    records_.push_back(std::move(rec));
    return static_cast<Index>(low);
}

std::optional<std::vector<Index>> Gf2Eliminator::solve(
    const std::vector<Index>& rhs_sorted_rows) const {
    if (!track_) throw InternalError("solve requires combination tracking");
    work_.clear();
    work_.xor_sparse(rhs_sorted_rows);
    if (comb_.size() < records_.size()) comb_ = BitVec(records_.size());
    comb_.clear();
    long long low = work_.highest();
    while (low >= 0 && pivot_of_row_[low] >= 0) {
        Index rec = static_cast<Index>(pivot_of_row_[low]);
        work_.xor_sparse(records_[rec].reduced);
        // reduced = original ^ (combination of earlier originals), so the
        // original column set contributing here is {rec} ^ combination.
        comb_.flip(rec);
        comb_.xor_sparse(records_[rec].combination);
        low = work_.highest();
    }
    if (low >= 0) return std::nullopt;
    return comb_.to_sparse();
}

bool Gf2Eliminator::reduces_to_zero(const std::vector<Index>& rhs_sorted_rows) const {
    work_.clear();
    work_.xor_sparse(rhs_sorted_rows);
    long long low = work_.highest();
    while (low >= 0 && pivot_of_row_[low] >= 0) {
        work_.xor_sparse(records_[static_cast<Index>(pivot_of_row_[low])].reduced);
        low = work_.highest();
    }
    return low < 0;
}

ReductionResult gf2_reduce(const Gf2Matrix& M, std::span<const Index> column_order) {
    Gf2Eliminator elim(M.n_rows());
    ReductionResult out;
    for (Index c : column_order) {
        if (auto row = elim.add_column(M.column(c))) {
            out.pivot_cols.push_back(c);
            out.pivot_row_of[c] = *row;
        } else {
            out.zero_cols.push_back(c);
        }
    }
    out.rank = elim.rank();
    return out;
}

ReductionResult gf2_reduce(const Gf2Matrix& M) {
    std::vector<Index> order(M.n_cols());
    std::iota(order.begin(), order.end(), 0);
    return gf2_reduce(M, order);
}

Gf2Matrix gf2_solve(const Gf2Matrix& A, const Gf2Matrix& B) {
    if (A.n_rows() != B.n_rows()) throw DimensionError("gf2 solve shape mismatch");
    Gf2Eliminator elim(A.n_rows(), true);
    for (Index c = 0; c < A.n_cols(); ++c)
        if (!elim.add_column(A.column(c)))
            throw NotFullRank("column " + std::to_string(c) + " dependent");
    Gf2Matrix X(A.n_cols(), B.n_cols());
    for (Index c = 0; c < B.n_cols(); ++c) {
        auto combo = elim.solve(B.column(c));
        if (!combo) throw NotInSpan("right-hand side column " + std::to_string(c));
        X.set_column(c, std::move(*combo));
    }
    return X;
}

} // namespace treeph
