#include "treeph/shorten.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "treeph/errors.hpp"
#include "treeph/gf2.hpp"

namespace treeph {

namespace {

std::size_t shared_count(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::size_t n = 0;
    auto ia = a.begin();
    for (Index x : b) {
        ia = std::lower_bound(ia, a.end(), x);
        if (ia == a.end()) break;
        if (*ia == x) ++n;
    }
    return n;
}

// Independence of the order-k cycles modulo boundaries; cheap per-move
// re-validation (full validate_basis covers the rest).
bool dimension_valid(const SimplicialNetwork& K, const std::vector<RepresentativeCycle>& cycles,
                     int k) {
    Gf2Eliminator elim(static_cast<Index>(K.size(k)));
    if (k < K.top_dim()) {
        const Gf2Matrix& B = K.boundary(k + 1).binary;
        for (Index c = 0; c < B.n_cols(); ++c) elim.add_column(B.column(c));
    }
    for (const RepresentativeCycle& c : cycles) {
        if (c.members.empty()) return false;
        if (!is_cycle(K, Chain{k, c.members})) return false;
        if (!elim.add_column(c.members)) return false;
    }
    return true;
}

} // namespace

std::pair<CavityBasis, std::vector<ShorteningMove>> shorten_basis(
    const SimplicialNetwork& K, const CavityBasis& basis, int k, int max_rounds) {
    if (k < 0 || k > K.top_dim() || basis.top_dim() != K.top_dim())
        throw DimensionError("shortening order " + std::to_string(k) + " out of range");
    CavityBasis out = basis;
    std::vector<ShorteningMove> log;
    auto& cycles = out.cycles[k];
    bool has_cofaces = k < K.top_dim();

    for (int round = 0; round < max_rounds; ++round) {
        bool any = false;
        std::vector<std::size_t> order(cycles.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return cycles[a].members.size() > cycles[b].members.size();
        });
        for (std::size_t id : order) {
            auto& cyc = cycles[id];
            std::size_t before = cyc.members.size();
            std::vector<Index> improved;
            ShorteningMove move;
            move.dim = k;
            move.cycle_id = id;
            move.before_len = before;

            if (has_cofaces) {
                const Gf2Matrix& B = K.boundary(k + 1).binary;
                std::set<Index> candidates;
                for (Index m : cyc.members)
                    for (Index cf : K.coface_indices(k, m)) candidates.insert(cf);
                for (Index cf : candidates) {
                    std::vector<Index> next = symmetric_difference(cyc.members, B.column(cf));
                    if (next.size() < before) {
                        improved = std::move(next);
                        move.kind = ShorteningMove::Kind::BoundaryAdd;
                        move.candidate = cf;
                        break;
                    }
                }
            }
            if (improved.empty()) {
                for (std::size_t j = 0; j < cycles.size(); ++j) {
                    if (j == id) continue;
                    const auto& other = cycles[j].members;
                    std::size_t shared = shared_count(cyc.members, other);
                    if (2 * shared <= std::min(before, other.size())) continue;
                    std::vector<Index> next = symmetric_difference(cyc.members, other);
                    if (next.size() < before) {
                        improved = std::move(next);
                        move.kind = ShorteningMove::Kind::CavityAdd;
                        move.candidate = static_cast<Index>(j);
                        break;
                    }
                }
            }
            if (improved.empty()) continue;

            std::vector<Index> saved = std::move(cyc.members);
            cyc.members = std::move(improved);
            if (!dimension_valid(K, cycles, k)) {
                cyc.members = std::move(saved);
                throw InternalError("shortening move broke the basis");
            }
            move.after_len = cyc.members.size();
            log.push_back(move);
            any = true;
        }
        if (!any) break;
    }
    return {std::move(out), std::move(log)};
}

std::vector<RepresentativeCycle> minimal_one_cavities(const SimplicialNetwork& K,
                                                      const TreeDecomposition& decomp) {
    std::vector<RepresentativeCycle> adopted;
    if (K.top_dim() < 1) return adopted;
    std::vector<RepresentativeCycle> eq1 = solve_cavities(K, decomp, 1);
    if (eq1.empty()) return adopted;

    Gf2Eliminator elim(static_cast<Index>(K.size(1)));
    if (K.top_dim() >= 2) {
        const Gf2Matrix& B2 = K.boundary(2).binary;
        for (Index c = 0; c < B2.n_cols(); ++c) elim.add_column(B2.column(c));
    }

    const auto& skeleton = K.skeleton_adjacency();
    // Edge lookup between registry-0 positions.
    auto edge_index = [&](Index a, Index b) -> Index {
        VertexId u = K.simplex(0, a).vertex(0), v = K.simplex(0, b).vertex(0);
        if (u > v) std::swap(u, v);
        auto idx = K.index_of(Simplex({u, v}));
        if (!idx) throw InternalError("skeleton edge is unregistered");
        return *idx;
    };

    struct Pending {
        Index generator;
        std::size_t cap;
    };
    std::vector<Pending> remaining;
    std::size_t max_cap = 0;
    for (const RepresentativeCycle& c : eq1) {
        remaining.push_back({c.generator, c.length()});
        max_cap = std::max(max_cap, c.length());
    }

    // Depth-limited search for a path u -> v of exactly `edges` edges on
    // the 1-skeleton avoiding the edge (u,v) itself, neighbors in
    // ascending order; the first adoptable cycle wins.
    std::vector<char> on_path(K.size(0), 0);
    std::vector<Index> path;
    auto try_adopt = [&](Index gen, const std::vector<Index>& vertex_cycle) -> bool {
        std::vector<Index> members;
        for (std::size_t i = 0; i < vertex_cycle.size(); ++i)
            members.push_back(edge_index(vertex_cycle[i],
                                         vertex_cycle[(i + 1) % vertex_cycle.size()]));
        std::sort(members.begin(), members.end());
        if (elim.reduces_to_zero(members)) return false;
        elim.add_column(members);
        RepresentativeCycle c;
        c.dim = 1;
        c.generator = gen;
        c.members = std::move(members);
        adopted.push_back(std::move(c));
        return true;
    };
    auto search = [&](auto&& self, Index gen, Index u, Index v, Index at,
                      std::size_t left) -> bool {
        if (left == 0) return false;
        for (Index w : skeleton[at]) {
            if (left == 1) {
                if (w == v) {
                    path.push_back(at);
                    path.push_back(v);
                    bool ok = try_adopt(gen, path);
                    path.pop_back();
                    path.pop_back();
                    if (ok) return true;
                }
                continue;
            }
            if (on_path[w] || w == v || (at == u && w == v)) continue;
            on_path[w] = 1;
            path.push_back(at);
            bool ok = self(self, gen, u, v, w, left - 1);
            path.pop_back();
            on_path[w] = 0;
            if (ok) return true;
        }
        return false;
    };

    for (std::size_t L = 3; L <= max_cap && !remaining.empty(); ++L) {
        for (std::size_t i = 0; i < remaining.size();) {
            auto [gen, cap] = remaining[i];
            if (L > cap) { ++i; continue; }
            auto f = K.face_indices(1, gen); // f[1] = first endpoint, f[0] = second
            Index u = f[1], v = f[0];
            on_path.assign(on_path.size(), 0);
            on_path[u] = 1;
            path.clear();
            if (search(search, gen, u, v, u, L - 1))
                remaining.erase(remaining.begin() + i);
            else
                ++i;
        }
    }
    // Insurance: adopt the Eq.-1 representative for anything left over.
    for (const auto& p : remaining) {
        for (const RepresentativeCycle& c : eq1) {
            if (c.generator != p.generator) continue;
            if (elim.reduces_to_zero(c.members))
                throw InternalError("no independent cycle for " +
                                    K.simplex(1, p.generator).str());
            elim.add_column(c.members);
            adopted.push_back(c);
        }
    }
    std::sort(adopted.begin(), adopted.end(),
              [](const RepresentativeCycle& a, const RepresentativeCycle& b) {
                  return a.generator < b.generator;
              });
    return adopted;
}

std::string move_log_text(const SimplicialNetwork& K, const std::vector<ShorteningMove>& log) {
    std::ostringstream out;
    for (const ShorteningMove& m : log) {
        out << m.dim << ' ' << m.cycle_id << ' ';
        if (m.kind == ShorteningMove::Kind::BoundaryAdd)
            out << "boundary-add " << K.simplex(m.dim + 1, m.candidate).str();
        else
            out << "cavity-add " << m.candidate;
        out << ' ' << m.before_len << ' ' << m.after_len << '\n';
    }
    return out.str();
}

} // namespace treeph
