#include "treeph/network.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "treeph/boundary.hpp"
#include "treeph/errors.hpp"

namespace treeph {

bool Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) return false;
    VertexId m = std::max(u, v);
    if (m >= adj_.size()) adj_.resize(m + 1);
    if (has_edge(u, v)) return false;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++n_edges_;
    finalized_ = false;
    return true;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    VertexId t = adj_[u].size() <= adj_[v].size() ? v : u;
    if (finalized_) return std::binary_search(a.begin(), a.end(), t);
    return std::find(a.begin(), a.end(), t) != a.end();
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(n_edges_);
    for (VertexId u = 0; u < adj_.size(); ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

void Graph::finalize() {
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    finalized_ = true;
}

std::vector<std::size_t> SimplicialNetwork::simplex_counts() const {
    std::vector<std::size_t> out(registry_.size());
    for (std::size_t k = 0; k < registry_.size(); ++k) out[k] = registry_[k].size();
    return out;
}

std::size_t SimplicialNetwork::total_size() const {
    std::size_t n = 0;
    for (const auto& reg : registry_) n += reg.size();
    return n;
}

std::optional<Index> SimplicialNetwork::index_of(const Simplex& s) const {
    int k = s.dimension();
    if (k < 0 || k > top_dim()) return std::nullopt;
    const auto& reg = registry_[k];
    auto it = std::lower_bound(reg.begin(), reg.end(), s);
    if (it == reg.end() || *it != s) return std::nullopt;
    return static_cast<Index>(it - reg.begin());
}

std::vector<Index> SimplicialNetwork::face_indices(int k, Index i) const {
    std::vector<Index> out;
    if (k <= 0) return out;
    const Simplex& s = registry_[k][i];
    out.reserve(s.vertex_count());
    for (std::size_t p = 0; p < s.vertex_count(); ++p) {
        auto idx = index_of(s.face_dropping(p));
        if (!idx) throw InternalError("registry is not downward closed");
        out.push_back(*idx);
    }
    return out;
}

const std::vector<Index>& SimplicialNetwork::coface_indices(int k, Index i) const {
    return cofaces_[k][i];
}

const BoundaryMatrixBundle& SimplicialNetwork::boundary(int k) const {
    if (k < 1 || k > top_dim())
        throw DimensionError("boundary order " + std::to_string(k) + " out of range");
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (boundary_cache_.size() < registry_.size()) boundary_cache_.resize(registry_.size());
    if (!boundary_cache_[k])
        boundary_cache_[k] = std::make_shared<const BoundaryMatrixBundle>(boundary_matrix(*this, k));
    return *boundary_cache_[k];
}

void SimplicialNetwork::build_incidence() {
    int l = top_dim();
    cofaces_.assign(registry_.size(), {});
    for (int k = 0; k <= l; ++k) cofaces_[k].assign(registry_[k].size(), {});
    for (int k = 1; k <= l; ++k) {
        for (Index i = 0; i < registry_[k].size(); ++i)
            for (Index f : face_indices(k, i)) cofaces_[k - 1][f].push_back(i);
        for (auto& cf : cofaces_[k - 1]) std::sort(cf.begin(), cf.end());
    }
    // Adjacency between registry-0 positions (ids need not be dense).
    skeleton_.assign(l >= 0 ? registry_[0].size() : 0, {});
    if (l >= 1) {
        for (Index i = 0; i < registry_[1].size(); ++i) {
            auto f = face_indices(1, i);
            skeleton_[f[0]].push_back(f[1]);
            skeleton_[f[1]].push_back(f[0]);
        }
        for (auto& nbrs : skeleton_) std::sort(nbrs.begin(), nbrs.end());
    }
}

SimplicialNetwork SimplicialNetwork::from_registries(std::vector<std::vector<Simplex>> regs,
                                                     std::vector<std::string> labels) {
    while (!regs.empty() && regs.back().empty()) regs.pop_back();
    SimplicialNetwork K;
    K.registry_ = std::move(regs);
    K.labels_ = std::move(labels);
    for (int k = 0; k <= K.top_dim(); ++k) {
        const auto& reg = K.registry_[k];
        for (Index i = 0; i < reg.size(); ++i) {
            if (reg[i].dimension() != k)
                throw InternalError("registry dimension mismatch");
            if (i && !(reg[i - 1] < reg[i]))
                throw InternalError("registry not sorted unique");
        }
    }
    K.build_incidence();
    return K;
}

namespace {

void expand_cliques(const Graph& g, int max_dim, std::vector<VertexId>& current,
                    const std::vector<VertexId>& candidates,
                    std::vector<std::vector<Simplex>>& regs) {
    int k = static_cast<int>(current.size()) - 1;
    if (static_cast<std::size_t>(k) >= regs.size()) regs.resize(k + 1);
    regs[k].emplace_back(current);
    if (max_dim >= 0 && k >= max_dim) return;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        VertexId v = candidates[i];
        std::vector<VertexId> next;
        const auto& nbrs = g.neighbors(v);
        std::set_intersection(candidates.begin() + i + 1, candidates.end(),
                              nbrs.begin(), nbrs.end(), std::back_inserter(next));
        current.push_back(v);
        expand_cliques(g, max_dim, current, next, regs);
        current.pop_back();
    }
}

} // namespace

SimplicialNetwork clique_complex(const Graph& g, int max_dim) {
    Graph sorted = g;
    sorted.finalize();
    std::vector<std::vector<Simplex>> regs;
    std::vector<VertexId> current;
    for (VertexId v = 0; v < sorted.vertex_count(); ++v) {
        const auto& nbrs = sorted.neighbors(v);
        std::vector<VertexId> above(std::upper_bound(nbrs.begin(), nbrs.end(), v), nbrs.end());
        current.push_back(v);
        expand_cliques(sorted, max_dim, current, above, regs);
        current.pop_back();
    }
    return SimplicialNetwork::from_registries(std::move(regs), g.labels());
}

SimplicialNetwork explicit_complex(std::span<const Simplex> simplex_list) {
    std::vector<std::unordered_set<Simplex, SimplexHash>> seen;
    auto insert_with_faces = [&](const Simplex& s, auto&& self) -> void {
        int k = s.dimension();
        if (static_cast<std::size_t>(k) >= seen.size()) seen.resize(k + 1);
        if (!seen[k].insert(s).second) return;
        for (std::size_t p = 0; k > 0 && p < s.vertex_count(); ++p)
            self(s.face_dropping(p), self);
    };
    for (const Simplex& s : simplex_list) insert_with_faces(s, insert_with_faces);
    std::vector<std::vector<Simplex>> regs(seen.size());
    for (std::size_t k = 0; k < seen.size(); ++k) {
        regs[k].assign(seen[k].begin(), seen[k].end());
        std::sort(regs[k].begin(), regs[k].end());
    }
    return SimplicialNetwork::from_registries(std::move(regs));
}

long long euler_characteristic(const SimplicialNetwork& K) {
    long long chi = 0;
    for (int k = 0; k <= K.top_dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(K.size(k));
    return chi;
}

} // namespace treeph
