#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "treeph/boundary.hpp"
#include "treeph/network.hpp"

namespace treeph {

/// Reference to a registered simplex as (dimension, registry position).
struct SimplexRef {
    int dim = -1;
    Index idx = 0;

    auto operator<=>(const SimplexRef&) const = default;
};

/// Per-dimension split of the simplices into k-order spanning trees,
/// tree-paired simplices, and cavity-generating simplices.
struct TreeDecomposition {
    // tree[k]: indices of the k-simplices in the k-order spanning tree,
    // ascending. tree[0] is empty (vertices are handled via roots).
    std::vector<std::vector<Index>> tree;
    // r[k] = rank of B_k; r[0] = 0 and r[l+1] = 0. Size top_dim + 2.
    std::vector<Index> rank;
    // paired[k]: (non-tree k-simplex, its partner in tree[k+1]),
    // ascending by the k-simplex index. Size top_dim + 1 with the top
    // entry empty.
    std::vector<std::vector<std::pair<Index, Index>>> paired;
    // generators[k]: cavity-generating k-simplices, ascending.
    std::vector<std::vector<Index>> generators;
    // One start vertex per connected component, ascending.
    std::vector<Index> roots;

    int top_dim() const { return static_cast<int>(tree.size()) - 1; }
};

/// The k-order spanning tree: pivot columns of B_k under lexicographic
/// column order, plus r_k. 1 <= k <= top_dim.
std::pair<std::vector<Index>, Index> spanning_tree(const SimplicialNetwork& K, int k);

/// Full classification of every simplex (trees, pairings, generators,
/// roots). Throws ClassificationError if the partition sizes disagree
/// with the Betti formula.
TreeDecomposition classify(const SimplicialNetwork& K);

struct BettiVector {
    std::vector<long long> beta;   // beta_0..beta_l
    std::vector<std::size_t> m;    // m_0..m_l
    std::vector<Index> rank;       // r_0..r_{l+1} (r_0 = r_{l+1} = 0)
    long long chi = 0;

    bool operator==(const BettiVector&) const = default;
};

/// β_k = m_k - r_k - r_{k+1}.
BettiVector betti_numbers(const SimplicialNetwork& K);

/// One filtration step: a single critical simplex, or a (face, coface)
/// pair inserted together.
struct MorseStep {
    bool is_pair = false;
    SimplexRef a;       // the critical simplex, or the pair's face
    SimplexRef b;       // the pair's coface (valid when is_pair)
};

/// A discrete Morse function presented as its induced filtration:
/// step i inserts either one critical simplex or one (face, coface)
/// pair, both members receiving Morse value i.
struct MorseFiltration {
    std::vector<MorseStep> steps;
    // value[k][i] = Morse value (step index) of simplex (k, i).
    std::vector<std::vector<Index>> value;
    // Simplices re-labeled critical by the scheduler's promotion
    // fallback, in promotion order. Empty when the pairing is perfect.
    std::vector<SimplexRef> promoted;

    Index n() const { return steps.empty() ? 0 : static_cast<Index>(steps.size()) - 1; }
};

/// Builds the optimal Morse filtration from a decomposition: the first
/// root, the tree[1] traversal pairs, the order-1 generators, the
/// (edge, triangle) pairs, and so on up to the top dimension. Falls
/// back to promotion when the greedy pair scheduler stalls. Throws
/// InvalidDecomposition when decomp does not belong to K.
MorseFiltration assign_morse(const SimplicialNetwork& K, const TreeDecomposition& decomp);

struct MorseViolation {
    SimplexRef simplex;
    std::size_t u_count = 0;
    std::size_t v_count = 0;
    std::string what;
};

struct MorseValidationReport {
    bool valid = false;
    std::vector<MorseViolation> violations;
    std::vector<SimplexRef> critical;     // ascending by (dim, idx)
    std::vector<long long> critical_count; // c_0..c_l
    std::vector<std::size_t> m;
    std::vector<long long> beta;
    long long chi_m = 0;
    long long chi_c = 0;
    long long chi_beta = 0;
    std::size_t promotions = 0;
};

/// Checks #U^f <= 1 and #V^f <= 1 for every simplex, collects the
/// critical set and counts, and evaluates the three alternating sums.
/// Violations are reported, not thrown.
MorseValidationReport validate_morse(const SimplicialNetwork& K, const MorseFiltration& f);

/// Line-oriented text format, one step per line:
///   <index> C <simplex>
///   <index> P <face> <coface>
/// with simplices as comma-separated vertex ids in parentheses.
std::string morse_to_text(const SimplicialNetwork& K, const MorseFiltration& f);

/// Parses the text format against K. Throws InvalidFiltration on
/// unknown simplices, gaps, duplicates, or non-coface pairs.
MorseFiltration morse_from_text(const SimplicialNetwork& K, const std::string& text);

} // namespace treeph
