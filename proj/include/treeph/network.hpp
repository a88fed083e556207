#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treeph/simplex.hpp"

namespace treeph {

struct BoundaryMatrixBundle;

/// An undirected simple graph over dense 0-based vertex ids, with an
/// optional label table preserving the original input identifiers.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return n_edges_; }

    /// Adds an undirected edge; self-loops and duplicates are ignored
    /// (returns false for them).
    bool add_edge(VertexId u, VertexId v);
    bool has_edge(VertexId u, VertexId v) const;

    /// Sorted neighbor list.
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }

    std::vector<std::pair<VertexId, VertexId>> edges() const;

    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Sorts neighbor lists; called once after bulk insertion.
    void finalize();

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::string> labels_;
    std::size_t n_edges_ = 0;
    bool finalized_ = true;
};

/// Per-dimension registries of simplices, downward closed, each sorted
/// lexicographically and duplicate-free. Immutable once built; boundary
/// matrices are cached write-once per dimension.
class SimplicialNetwork {
public:
    SimplicialNetwork() = default;
    SimplicialNetwork(const SimplicialNetwork& other) { *this = other; }
    SimplicialNetwork(SimplicialNetwork&& other) { *this = std::move(other); }
    SimplicialNetwork& operator=(const SimplicialNetwork& other) {
        if (this != &other) {
            std::scoped_lock lock(other.cache_mutex_);
            registry_ = other.registry_;
            cofaces_ = other.cofaces_;
            skeleton_ = other.skeleton_;
            labels_ = other.labels_;
            boundary_cache_ = other.boundary_cache_;
        }
        return *this;
    }
    SimplicialNetwork& operator=(SimplicialNetwork&& other) {
        if (this != &other) {
            std::scoped_lock lock(other.cache_mutex_);
            registry_ = std::move(other.registry_);
            cofaces_ = std::move(other.cofaces_);
            skeleton_ = std::move(other.skeleton_);
            labels_ = std::move(other.labels_);
            boundary_cache_ = std::move(other.boundary_cache_);
        }
        return *this;
    }

    /// l; -1 for the empty network.
    int top_dim() const { return static_cast<int>(registry_.size()) - 1; }

    /// m_k (0 for k out of range).
    std::size_t size(int k) const {
        return (k >= 0 && k <= top_dim()) ? registry_[k].size() : 0;
    }

    /// m_0..m_l.
    std::vector<std::size_t> simplex_counts() const;

    /// Total number of simplices of all orders.
    std::size_t total_size() const;

    const std::vector<Simplex>& simplices(int k) const { return registry_[k]; }
    const Simplex& simplex(int k, Index i) const { return registry_[k][i]; }

    /// Position of s in registry[s.dimension()], if registered.
    std::optional<Index> index_of(const Simplex& s) const;

    /// Indices into registry[k-1] of the faces of simplex (k, i), in
    /// deleted-position order p = 0..k. Empty for k = 0.
    std::vector<Index> face_indices(int k, Index i) const;

    /// Indices into registry[k+1] of the cofaces of simplex (k, i).
    const std::vector<Index>& coface_indices(int k, Index i) const;

    /// Adjacency over the 1-skeleton, between registry-0 positions
    /// (sorted lists; ids need not be dense).
    const std::vector<std::vector<VertexId>>& skeleton_adjacency() const { return skeleton_; }

    const std::vector<std::string>& vertex_labels() const { return labels_; }

    /// Cached k-th boundary matrix bundle (built on first use).
    const BoundaryMatrixBundle& boundary(int k) const;

    /// Builds a network from per-dimension registries that are already
    /// sorted, unique, and downward closed. Internal entry point used by
    /// the public builders.
    static SimplicialNetwork from_registries(std::vector<std::vector<Simplex>> regs,
                                             std::vector<std::string> labels = {});

private:
    void build_incidence();

    std::vector<std::vector<Simplex>> registry_;
    std::vector<std::vector<std::vector<Index>>> cofaces_; // [k][i] -> indices in registry[k+1]
    std::vector<std::vector<VertexId>> skeleton_;
    std::vector<std::string> labels_;

    mutable std::mutex cache_mutex_;
    mutable std::vector<std::shared_ptr<const BoundaryMatrixBundle>> boundary_cache_;
};

/// All cliques of the graph as simplices, up to dimension max_dim
/// (unbounded when max_dim < 0). Ordered-vertex recursive expansion;
/// output registries are canonical (lexicographic) by construction.
SimplicialNetwork clique_complex(const Graph& g, int max_dim = -1);

/// Registers every listed simplex and all of its faces.
SimplicialNetwork explicit_complex(std::span<const Simplex> simplex_list);

/// χ = m_0 - m_1 + m_2 - ... + (-1)^l m_l.
long long euler_characteristic(const SimplicialNetwork& K);

} // namespace treeph
