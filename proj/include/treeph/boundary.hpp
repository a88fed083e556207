#pragma once

#include <cstdint>
#include <vector>

#include "treeph/gf2.hpp"
#include "treeph/network.hpp"
#include "treeph/rational.hpp"

namespace treeph {

/// A k-chain over GF(2): a duplicate-free set of indices into
/// registry[k], kept sorted.
struct Chain {
    int dim = -1;
    std::vector<Index> members; // sorted, unique

    std::size_t length() const { return members.size(); }
    bool empty() const { return members.empty(); }

    bool operator==(const Chain&) const = default;
};

/// Symmetric difference of two sorted index sets (GF(2) addition).
std::vector<Index> symmetric_difference(const std::vector<Index>& a,
                                        const std::vector<Index>& b);

/// The k-th boundary matrix in both coefficient conventions: rows are
/// (k-1)-simplices, columns are k-simplices. The binary entry is 1 iff
/// the row simplex is a face of the column simplex; the oriented entry
/// for deleting vertex position p is (-1)^p.
struct BoundaryMatrixBundle {
    int k = 0;
    Gf2Matrix binary;
    // oriented[c] lists (row, sign) with sign in {-1, +1}; rows ascend.
    std::vector<std::vector<std::pair<Index, int>>> oriented;

    Index n_rows() const { return binary.n_rows(); }
    Index n_cols() const { return binary.n_cols(); }
};

/// Builds the bundle for 1 <= k <= top_dim. Throws DimensionError
/// otherwise. (Networks cache this; prefer K.boundary(k).)
BoundaryMatrixBundle boundary_matrix(const SimplicialNetwork& K, int k);

/// ∂_k applied to a chain: the GF(2) sum of the face sets of its
/// members. A 0-chain maps to the empty chain of dim -1.
Chain apply_boundary(const SimplicialNetwork& K, const Chain& c);

/// ∂_k(c) = 0?
bool is_cycle(const SimplicialNetwork& K, const Chain& c);

/// Integer-valued Hodge-Laplacian L_(k) = B_[k]^T B_[k] + B_[k+1] B_[k+1]^T,
/// with missing boundary matrices treated as zero.
RationalMatrix hodge_laplacian(const SimplicialNetwork& K, int k);

/// β_k as the kernel dimension of L_(k): m_k - rank(L_(k)).
long long hodge_betti(const SimplicialNetwork& K, int k);

} // namespace treeph
