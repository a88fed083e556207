#pragma once

#include <string>
#include <vector>

#include "treeph/cavity.hpp"
#include "treeph/morse.hpp"
#include "treeph/network.hpp"

namespace treeph {

/// An accepted length-reducing move on one basis cycle: adding the
/// boundary of a (k+1)-simplex, or adding another basis cycle that
/// shares more than half of the shorter cycle's simplices.
struct ShorteningMove {
    enum class Kind { BoundaryAdd, CavityAdd };

    int dim = 0;
    std::size_t cycle_id = 0;  // position within basis.cycles[dim]
    Kind kind = Kind::BoundaryAdd;
    // BoundaryAdd: index of the (k+1)-simplex; CavityAdd: index of the
    // other cycle within the same dimension.
    Index candidate = 0;
    std::size_t before_len = 0;
    std::size_t after_len = 0;
};

/// Iterative shortening: passes over the cycles in descending length
/// order, first-improvement acceptance with deterministic candidate
/// order, until a fixpoint or max_rounds. The returned basis is
/// re-validated after every accepted move.
std::pair<CavityBasis, std::vector<ShorteningMove>> shorten_basis(
    const SimplicialNetwork& K, const CavityBasis& basis, int k, int max_rounds = 10);

/// Exhaustive minimal 1-cavities: for L = 3, 4, ... enumerate simple
/// cycles of length L through each remaining generator edge and adopt
/// those independent of the boundary space plus already-adopted cycles.
/// Terminates because the Eq.-1 representative bounds L per generator.
std::vector<RepresentativeCycle> minimal_one_cavities(const SimplicialNetwork& K,
                                                      const TreeDecomposition& decomp);

/// One line per accepted move: `dim cycle-id kind candidate before after`.
std::string move_log_text(const SimplicialNetwork& K, const std::vector<ShorteningMove>& log);

} // namespace treeph
