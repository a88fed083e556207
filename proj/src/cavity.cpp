#include "treeph/cavity.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "treeph/errors.hpp"
#include "treeph/gf2.hpp"
#include "treeph/rational.hpp"

namespace treeph {

std::vector<RepresentativeCycle> solve_cavities(const SimplicialNetwork& K,
                                                const TreeDecomposition& decomp, int k) {
    if (k < 1 || k > K.top_dim() || decomp.top_dim() != K.top_dim())
        throw DimensionError("cavity order " + std::to_string(k) + " out of range");
    const auto& gens = decomp.generators[k];
    std::vector<RepresentativeCycle> out;
    if (gens.empty()) return out;
    const Gf2Matrix& B = K.boundary(k).binary;
    Gf2Eliminator elim(B.n_rows(), true);
    for (Index t : decomp.tree[k])
        if (!elim.add_column(B.column(t)))
            throw NotFullRank("tree column " + K.simplex(k, t).str() + " is dependent");
    for (Index g : gens) {
        auto combo = elim.solve(B.column(g));
        if (!combo) throw NotInSpan("generator " + K.simplex(k, g).str());
        RepresentativeCycle c;
        c.dim = k;
        c.generator = g;
        c.members.reserve(combo->size() + 1);
        for (Index ordinal : *combo) c.members.push_back(decomp.tree[k][ordinal]);
        c.members.push_back(g);
        std::sort(c.members.begin(), c.members.end());
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<RepresentativeCycle> solve_cavities_oriented(const SimplicialNetwork& K,
                                                         const TreeDecomposition& decomp,
                                                         int k) {
    if (k < 1 || k > K.top_dim() || decomp.top_dim() != K.top_dim())
        throw DimensionError("cavity order " + std::to_string(k) + " out of range");
    const auto& gens = decomp.generators[k];
    std::vector<RepresentativeCycle> out;
    if (gens.empty()) return out;

    const auto& bundle = K.boundary(k);
    const auto& tree = decomp.tree[k];
    Index rows = bundle.n_rows();
    Index nt = static_cast<Index>(tree.size());
    Index ng = static_cast<Index>(gens.size());
    RationalMatrix T(rows, nt), C(rows, ng);
    for (Index j = 0; j < nt; ++j)
        for (auto [r, s] : bundle.oriented[tree[j]]) T.at(r, j) = s;
    for (Index j = 0; j < ng; ++j)
        for (auto [r, s] : bundle.oriented[gens[j]]) C.at(r, j) = s;

    // Normal equations of Eq. (2); the Gram matrix of the independent tree
    // columns is invertible over the rationals.
    RationalMatrix Tt = T.transposed();
    RationalMatrix x = rational_solve(Tt.multiply(T), Tt.multiply(C));

    for (Index j = 0; j < ng; ++j) {
        RepresentativeCycle c;
        c.dim = k;
        c.generator = gens[j];
        for (Index t = 0; t < nt; ++t) {
            const BigRat& v = x.at(t, j);
            BigInt den = boost::multiprecision::denominator(v);
            if (den % 2 == 0)
                throw OrientedReductionUndefined(
                    "entry for " + K.simplex(k, tree[t]).str() + " has an even denominator");
            if (boost::multiprecision::numerator(v) % 2 != 0) c.members.push_back(tree[t]);
        }
        c.members.push_back(gens[j]);
        std::sort(c.members.begin(), c.members.end());
        out.push_back(std::move(c));
    }
    return out;
}

CavityBasis solve_all_cavities(const SimplicialNetwork& K, const TreeDecomposition& decomp) {
    CavityBasis basis;
    int l = K.top_dim();
    if (l < 0) return basis;
    basis.cycles.resize(l + 1);
    for (Index r : decomp.roots) {
        RepresentativeCycle c;
        c.dim = 0;
        c.generator = r;
        c.members = {r};
        basis.cycles[0].push_back(std::move(c));
    }
    for (int k = 1; k <= l; ++k) basis.cycles[k] = solve_cavities(K, decomp, k);
    return basis;
}

BasisReport validate_basis(const SimplicialNetwork& K, const CavityBasis& basis) {
    BasisReport rep;
    int l = K.top_dim();
    if (basis.top_dim() != l) {
        rep.failures.push_back("basis does not cover the network's dimensions");
        rep.valid = false;
        return rep;
    }
    BettiVector b = betti_numbers(K);
    rep.span_rank.assign(l + 1, 0);
    for (int k = 0; k <= l; ++k) {
        const auto& cycles = basis.cycles[k];
        if (static_cast<long long>(cycles.size()) != b.beta[k])
            rep.failures.push_back("order " + std::to_string(k) + " has " +
                                   std::to_string(cycles.size()) + " cycles, expected " +
                                   std::to_string(b.beta[k]));
        Gf2Eliminator elim(static_cast<Index>(K.size(k)));
        if (k < l) {
            const Gf2Matrix& B = K.boundary(k + 1).binary;
            for (Index c = 0; c < B.n_cols(); ++c) elim.add_column(B.column(c));
        }
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            const RepresentativeCycle& c = cycles[i];
            std::string label = "order " + std::to_string(k) + " cycle " + std::to_string(i);
            if (c.dim != k || c.members.empty() ||
                !std::is_sorted(c.members.begin(), c.members.end()) ||
                c.members.back() >= K.size(k)) {
                rep.failures.push_back(label + " is malformed");
                continue;
            }
            if (!is_cycle(K, Chain{k, c.members})) {
                rep.failures.push_back(label + " has nonzero boundary");
                continue;
            }
            if (!elim.add_column(c.members))
                rep.failures.push_back(label + " is dependent modulo boundaries");
        }
        rep.span_rank[k] = elim.rank();
    }
    rep.valid = rep.failures.empty();
    return rep;
}

std::string cavities_to_text(const SimplicialNetwork& K, const CavityBasis& basis) {
    std::ostringstream out;
    for (int k = 0; k <= basis.top_dim(); ++k) {
        for (const RepresentativeCycle& c : basis.cycles[k]) {
            out << k << ' ' << K.simplex(k, c.generator).str() << " :";
            for (std::size_t i = 0; i < c.members.size(); ++i)
                out << (i ? ";" : " ") << K.simplex(k, c.members[i]).str();
            out << '\n';
        }
    }
    return out.str();
}

std::string cavities_to_structured(const SimplicialNetwork& K, const CavityBasis& basis) {
    nlohmann::json doc;
    doc["dimensions"] = nlohmann::json::array();
    for (int k = 0; k <= basis.top_dim(); ++k) {
        nlohmann::json dim;
        dim["dim"] = k;
        dim["cycles"] = nlohmann::json::array();
        for (const RepresentativeCycle& c : basis.cycles[k]) {
            nlohmann::json jc;
            jc["generator"] = K.simplex(k, c.generator).str();
            jc["length"] = c.members.size();
            jc["members"] = nlohmann::json::array();
            for (Index m : c.members) jc["members"].push_back(K.simplex(k, m).str());
            dim["cycles"].push_back(std::move(jc));
        }
        doc["dimensions"].push_back(std::move(dim));
    }
    return doc.dump(2) + "\n";
}

} // namespace treeph
