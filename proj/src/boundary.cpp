#include "treeph/boundary.hpp"

#include <algorithm>

#include "treeph/errors.hpp"

namespace treeph {

std::vector<Index> symmetric_difference(const std::vector<Index>& a,
                                        const std::vector<Index>& b) {
    std::vector<Index> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

BoundaryMatrixBundle boundary_matrix(const SimplicialNetwork& K, int k) {
    if (k < 1 || k > K.top_dim())
        throw DimensionError("boundary order " + std::to_string(k) + " out of range");
    BoundaryMatrixBundle b;
    b.k = k;
    Index rows = static_cast<Index>(K.size(k - 1));
    Index cols = static_cast<Index>(K.size(k));
    b.binary = Gf2Matrix(rows, cols);
    b.oriented.resize(cols);
    for (Index c = 0; c < cols; ++c) {
        std::vector<Index> f = K.face_indices(k, c); // deleted-position order
        std::vector<std::pair<Index, int>> signed_faces(f.size());
        for (std::size_t p = 0; p < f.size(); ++p)
            signed_faces[p] = {f[p], (p % 2 == 0) ? 1 : -1};
        std::sort(signed_faces.begin(), signed_faces.end());
        b.oriented[c] = signed_faces;
        std::vector<Index> rows_sorted(f.size());
        for (std::size_t p = 0; p < f.size(); ++p) rows_sorted[p] = signed_faces[p].first;
        b.binary.set_column(c, std::move(rows_sorted));
    }
    return b;
}

Chain apply_boundary(const SimplicialNetwork& K, const Chain& c) {
    Chain out;
    out.dim = std::max(c.dim - 1, -1);
    if (c.dim <= 0 || c.empty()) return out;
    const auto& B = K.boundary(c.dim).binary;
    BitVec acc(B.n_rows());
    for (Index i : c.members) acc.xor_sparse(B.column(i));
    out.members = acc.to_sparse();
    return out;
}

bool is_cycle(const SimplicialNetwork& K, const Chain& c) {
    return apply_boundary(K, c).empty();
}

namespace {

RationalMatrix oriented_dense(const SimplicialNetwork& K, int k) {
    const auto& b = K.boundary(k);
    RationalMatrix M(b.n_rows(), b.n_cols());
    for (Index c = 0; c < b.n_cols(); ++c)
        for (auto [r, s] : b.oriented[c]) M.at(r, c) = s;
    return M;
}

} // namespace

RationalMatrix hodge_laplacian(const SimplicialNetwork& K, int k) {
    if (k < 0 || k > K.top_dim())
        throw DimensionError("laplacian order " + std::to_string(k) + " out of range");
    Index n = static_cast<Index>(K.size(k));
    RationalMatrix L(n, n);
    if (k >= 1) {
        RationalMatrix B = oriented_dense(K, k);
        L = B.transposed().multiply(B);
    }
    if (k + 1 <= K.top_dim()) {
        RationalMatrix B = oriented_dense(K, k + 1);
        RationalMatrix up = B.multiply(B.transposed());
        for (Index r = 0; r < n; ++r)
            for (Index c = 0; c < n; ++c) L.at(r, c) += up.at(r, c);
    }
    return L;
}

long long hodge_betti(const SimplicialNetwork& K, int k) {
    return static_cast<long long>(K.size(k)) -
           static_cast<long long>(rational_rank(hodge_laplacian(K, k)));
}

} // namespace treeph
