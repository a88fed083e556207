#pragma once

#include <string>
#include <vector>

#include "treeph/boundary.hpp"
#include "treeph/morse.hpp"
#include "treeph/network.hpp"

namespace treeph {

/// A representative cycle of one cavity: the generating k-simplex plus
/// the tree simplices solved from the spanning-tree equation.
struct RepresentativeCycle {
    int dim = 0;
    Index generator = 0;        // index into registry[dim]
    std::vector<Index> members; // sorted, includes generator

    std::size_t length() const { return members.size(); }
};

/// One representative cycle per generator, per dimension.
struct CavityBasis {
    std::vector<std::vector<RepresentativeCycle>> cycles; // [k]

    int top_dim() const { return static_cast<int>(cycles.size()) - 1; }
    std::size_t count(int k) const {
        return (k >= 0 && k <= top_dim()) ? cycles[k].size() : 0;
    }
};

/// Solves (T-B_k)(T-x)^T = (C-B_k) over GF(2): one reduction of the
/// tree columns, one solve per generator column. The cycle for
/// generator g is {g} ∪ {t in tree[k] : x_t = 1}.
std::vector<RepresentativeCycle> solve_cavities(const SimplicialNetwork& K,
                                                const TreeDecomposition& decomp, int k);

/// Oriented variant: forms the normal equations of the signed system,
/// solves exactly over the rationals, and maps entries to GF(2) by the
/// odd-denominator rule. An even denominator throws
/// OrientedReductionUndefined (callers fall back to solve_cavities).
std::vector<RepresentativeCycle> solve_cavities_oriented(const SimplicialNetwork& K,
                                                         const TreeDecomposition& decomp,
                                                         int k);

/// solve_cavities for every dimension 1..top_dim, plus the 0-order
/// representatives (one root vertex per component).
CavityBasis solve_all_cavities(const SimplicialNetwork& K, const TreeDecomposition& decomp);

struct BasisReport {
    bool valid = false;
    std::vector<std::string> failures;
    // per dimension: rank of span({cycles} ∪ {columns of B_{k+1}})
    std::vector<Index> span_rank;
};

/// Checks every cycle has zero boundary, counts match β_k, and the
/// cycles are independent modulo boundaries.
BasisReport validate_basis(const SimplicialNetwork& K, const CavityBasis& basis);

/// Flat text export: one line per cycle,
/// `k <generator> : <simplex>;<simplex>;...`.
std::string cavities_to_text(const SimplicialNetwork& K, const CavityBasis& basis);

/// Structured (JSON) export.
std::string cavities_to_structured(const SimplicialNetwork& K, const CavityBasis& basis);

} // namespace treeph
