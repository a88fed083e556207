#include "treeph/morse.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <sstream>

#include "treeph/errors.hpp"
#include "treeph/gf2.hpp"

namespace treeph {

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

struct Traversal {
    std::vector<Index> roots; // ascending
    // Per component, pairs (vertex, tree edge) in BFS emission order.
    std::vector<std::vector<std::pair<Index, Index>>> component_pairs;
};

// Breadth-first over the tree[1] forest, roots = lowest position per
// component, neighbor order by vertex id.
Traversal traverse_tree1(const SimplicialNetwork& K, const std::vector<Index>& tree1) {
    std::size_t n = K.size(0);
    std::vector<std::vector<std::pair<Index, Index>>> adj(n); // (neighbor, edge)
    for (Index e : tree1) {
        auto f = K.face_indices(1, e); // f[0] = second vertex, f[1] = first
        adj[f[0]].emplace_back(f[1], e);
        adj[f[1]].emplace_back(f[0], e);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    Traversal tr;
    std::vector<char> seen(n, 0);
    for (Index v = 0; v < n; ++v) {
        if (seen[v]) continue;
        tr.roots.push_back(v);
        tr.component_pairs.emplace_back();
        auto& pairs = tr.component_pairs.back();
        seen[v] = 1;
        std::queue<Index> q;
        q.push(v);
        while (!q.empty()) {
            Index u = q.front();
            q.pop();
            for (auto [w, e] : adj[u]) {
                if (seen[w]) continue;
                seen[w] = 1;
                pairs.emplace_back(w, e);
                q.push(w);
            }
        }
    }
    return tr;
}

} // namespace

std::pair<std::vector<Index>, Index> spanning_tree(const SimplicialNetwork& K, int k) {
    ReductionResult r = gf2_reduce(K.boundary(k).binary);
    return {std::move(r.pivot_cols), r.rank};
}

TreeDecomposition classify(const SimplicialNetwork& K) {
    int l = K.top_dim();
    TreeDecomposition d;
    d.tree.resize(l + 1);
    d.rank.assign(l + 2, 0);
    d.paired.resize(l + 1);
    d.generators.resize(l + 1);
    if (l < 0) return d;

    std::vector<std::vector<char>> in_tree(l + 1);
    for (int k = 0; k <= l; ++k) in_tree[k].assign(K.size(k), 0);
    for (int k = 1; k <= l; ++k) {
        auto [tree, rank] = spanning_tree(K, k);
        for (Index i : tree) in_tree[k][i] = 1;
        d.tree[k] = std::move(tree);
        d.rank[k] = rank;
    }

    Traversal tr = traverse_tree1(K, l >= 1 ? d.tree[1] : std::vector<Index>{});
    d.roots = tr.roots;
    for (const auto& comp : tr.component_pairs)
        d.paired[0].insert(d.paired[0].end(), comp.begin(), comp.end());
    std::sort(d.paired[0].begin(), d.paired[0].end());

    // Pair tree[k+1] simplices with non-tree k-simplices: reduce the tree
    // columns restricted to non-tree rows, lexicographic column order,
    // pivot = largest-index eligible row.
    for (int k = 1; k < l; ++k) {
        std::vector<Index> non_tree;
        for (Index i = 0; i < K.size(k); ++i)
            if (!in_tree[k][i]) non_tree.push_back(i);
        std::vector<long long> pos(K.size(k), -1);
        for (Index p = 0; p < non_tree.size(); ++p) pos[non_tree[p]] = p;
        Gf2Eliminator elim(static_cast<Index>(non_tree.size()));
        const auto& B = K.boundary(k + 1).binary;
        for (Index col : d.tree[k + 1]) {
            std::vector<Index> restricted;
            for (Index r : B.column(col))
                if (pos[r] >= 0) restricted.push_back(static_cast<Index>(pos[r]));
            auto pivot = elim.add_column(restricted);
            if (!pivot)
                throw ClassificationError("tree column " + K.simplex(k + 1, col).str() +
                                          " has no eligible pivot");
            d.paired[k].emplace_back(non_tree[*pivot], col);
        }
        std::sort(d.paired[k].begin(), d.paired[k].end());
    }

    // Generators: the non-tree, non-paired remainder; order 0 generators
    // are the roots themselves.
    d.generators[0] = d.roots;
    for (int k = 1; k <= l; ++k) {
        std::vector<char> taken = in_tree[k];
        for (auto [s, t] : d.paired[k]) taken[s] = 1;
        for (Index i = 0; i < K.size(k); ++i)
            if (!taken[i]) d.generators[k].push_back(i);
    }

    BettiVector b = betti_numbers(K);
    for (int k = 0; k <= l; ++k) {
        if (static_cast<long long>(d.generators[k].size()) != b.beta[k])
            throw ClassificationError("generator count in order " + std::to_string(k) +
                                      " disagrees with the Betti number");
        if (k < l && d.paired[k].size() != d.rank[k + 1])
            throw ClassificationError("pairing in order " + std::to_string(k) +
                                      " is incomplete");
    }
    return d;
}

BettiVector betti_numbers(const SimplicialNetwork& K) {
    int l = K.top_dim();
    BettiVector b;
    b.m = K.simplex_counts();
    b.rank.assign(l + 2, 0);
    for (int k = 1; k <= l; ++k) b.rank[k] = gf2_reduce(K.boundary(k).binary).rank;
    b.beta.resize(l + 1);
    for (int k = 0; k <= l; ++k)
        b.beta[k] = static_cast<long long>(b.m[k]) - b.rank[k] - b.rank[k + 1];
    b.chi = euler_characteristic(K);
    return b;
}

namespace {

void check_decomposition(const SimplicialNetwork& K, const TreeDecomposition& d) {
    int l = K.top_dim();
    if (d.top_dim() != l || d.rank.size() != static_cast<std::size_t>(l + 2) ||
        d.paired.size() != static_cast<std::size_t>(l + 1) ||
        d.generators.size() != static_cast<std::size_t>(l + 1))
        throw InvalidDecomposition("decomposition shape does not match the network");
    if (l < 0) return;
    if (!d.tree[0].empty()) throw InvalidDecomposition("tree[0] must be empty");
    for (int k = 0; k <= l; ++k) {
        // Every k-simplex appears exactly once among tree, paired faces,
        // and (for k = 0) roots; generators[0] aliases the roots.
        std::vector<char> seen(K.size(k), 0);
        auto mark = [&](Index i, const char* what) {
            if (i >= K.size(k) || seen[i])
                throw InvalidDecomposition(std::string(what) + " entry invalid in order " +
                                           std::to_string(k));
            seen[i] = 1;
        };
        for (Index i : d.tree[k]) mark(i, "tree");
        for (auto [s, t] : d.paired[k]) {
            mark(s, "paired");
            if (k == l || t >= K.size(k + 1) ||
                !std::binary_search(d.tree[k + 1].begin(), d.tree[k + 1].end(), t))
                throw InvalidDecomposition("pair partner outside tree in order " +
                                           std::to_string(k));
        }
        if (k == 0) {
            for (Index i : d.roots) mark(i, "roots");
            if (d.generators[0] != d.roots)
                throw InvalidDecomposition("order-0 generators must equal the roots");
        } else {
            for (Index i : d.generators[k]) mark(i, "generators");
        }
        for (Index i = 0; i < K.size(k); ++i)
            if (!seen[i])
                throw InvalidDecomposition(K.simplex(k, i).str() + " is unclassified");
    }
    for (int k = 0; k < l; ++k)
        if (d.paired[k].size() != d.tree[k + 1].size())
            throw InvalidDecomposition("pair count in order " + std::to_string(k) +
                                       " does not cover tree[" + std::to_string(k + 1) + "]");
}

} // namespace

MorseFiltration assign_morse(const SimplicialNetwork& K, const TreeDecomposition& decomp) {
    check_decomposition(K, decomp);
    int l = K.top_dim();
    MorseFiltration f;
    f.value.resize(l + 1);
    for (int k = 0; k <= l; ++k) f.value[k].assign(K.size(k), kUnset);
    if (l < 0) return f;

    auto emit = [&](MorseStep step) {
        Index t = static_cast<Index>(f.steps.size());
        f.value[step.a.dim][step.a.idx] = t;
        if (step.is_pair) f.value[step.b.dim][step.b.idx] = t;
        f.steps.push_back(step);
    };
    auto present = [&](int k, Index i) { return f.value[k][i] != kUnset; };

    // Roots and the tree[1] traversal, component by component.
    Traversal tr = traverse_tree1(K, l >= 1 ? decomp.tree[1] : std::vector<Index>{});
    if (tr.roots != decomp.roots)
        throw InvalidDecomposition("roots do not match the tree[1] components");
    {
        std::vector<std::pair<Index, Index>> bfs_pairs;
        for (const auto& comp : tr.component_pairs)
            bfs_pairs.insert(bfs_pairs.end(), comp.begin(), comp.end());
        std::sort(bfs_pairs.begin(), bfs_pairs.end());
        if (bfs_pairs != decomp.paired[0])
            throw InvalidDecomposition("order-0 pairing does not match the tree[1] traversal");
    }
    for (std::size_t c = 0; c < tr.roots.size(); ++c) {
        emit({false, {0, tr.roots[c]}, {}});
        for (auto [v, e] : tr.component_pairs[c]) emit({true, {0, v}, {1, e}});
    }
    if (l >= 1)
        for (Index g : decomp.generators[1]) emit({false, {1, g}, {}});

    // Higher phases: pairs (k-1 simplex, tree[k] simplex), then the
    // order-k generators.
    for (int k = 2; k <= l; ++k) {
        const auto& pairs = decomp.paired[k - 1]; // ascending by face
        std::size_t np = pairs.size();
        std::vector<char> done(np, 0), incident(np, 0);
        std::vector<std::size_t> pending(np, 0);
        std::vector<std::vector<std::size_t>> waiting(K.size(k - 1));
        for (std::size_t p = 0; p < np; ++p) {
            auto [sigma, tau] = pairs[p];
            const Simplex& s = K.simplex(k - 1, sigma);
            incident[p] = K.simplex(k, tau).has_face(s);
            for (Index face : K.face_indices(k, tau)) {
                if (incident[p] && face == sigma) continue;
                if (!present(k - 1, face)) {
                    ++pending[p];
                    waiting[face].push_back(p);
                }
            }
        }
        // Min-heap of schedulable pairs, keyed by the face index.
        std::priority_queue<std::pair<Index, std::size_t>,
                            std::vector<std::pair<Index, std::size_t>>,
                            std::greater<>> ready;
        for (std::size_t p = 0; p < np; ++p)
            if (incident[p] && pending[p] == 0) ready.emplace(pairs[p].first, p);
        std::vector<Index> orphans;
        auto propagate = [&](Index face) {
            for (std::size_t p : waiting[face])
                if (!done[p] && --pending[p] == 0 && incident[p])
                    ready.emplace(pairs[p].first, p);
        };
        auto drain_orphans = [&] {
            for (;;) {
                std::size_t best = orphans.size();
                for (std::size_t i = 0; i < orphans.size(); ++i) {
                    bool ok = true;
                    for (Index face : K.face_indices(k, orphans[i]))
                        ok = ok && present(k - 1, face);
                    if (ok && (best == orphans.size() || orphans[i] < orphans[best]))
                        best = i;
                }
                if (best == orphans.size()) return;
                Index tau = orphans[best];
                emit({false, {k, tau}, {}});
                f.promoted.push_back({k, tau});
                orphans.erase(orphans.begin() + best);
            }
        };
        std::size_t scheduled = 0;
        while (scheduled < np) {
            if (!ready.empty()) {
                auto [sigma, p] = ready.top();
                ready.pop();
                if (done[p]) continue;
                done[p] = 1;
                ++scheduled;
                emit({true, {k - 1, sigma}, {k, pairs[p].second}});
                propagate(sigma);
            } else {
                // Stalled: promote the smallest unscheduled face, orphan
                // its partner.
                std::size_t p = 0;
                while (p < np && done[p]) ++p;
                done[p] = 1;
                ++scheduled;
                Index sigma = pairs[p].first;
                emit({false, {k - 1, sigma}, {}});
                f.promoted.push_back({k - 1, sigma});
                orphans.push_back(pairs[p].second);
                propagate(sigma);
            }
            drain_orphans();
        }
        if (!orphans.empty()) throw InternalError("orphaned tree simplex is unschedulable");
        for (Index g : decomp.generators[k]) emit({false, {k, g}, {}});
    }

    for (int k = 0; k <= l; ++k)
        for (Index i = 0; i < K.size(k); ++i)
            if (!present(k, i)) throw InternalError("simplex left without a Morse value");
    return f;
}

MorseValidationReport validate_morse(const SimplicialNetwork& K, const MorseFiltration& f) {
    int l = K.top_dim();
    MorseValidationReport rep;
    rep.m = K.simplex_counts();
    rep.critical_count.assign(l + 1, 0);
    rep.promotions = f.promoted.size();

    bool covered = f.value.size() == static_cast<std::size_t>(l + 1);
    for (int k = 0; covered && k <= l; ++k)
        covered = f.value[k].size() == K.size(k);
    if (!covered) {
        rep.violations.push_back({{-1, 0}, 0, 0, "filtration does not cover the network"});
        rep.valid = false;
        return rep;
    }

    for (int k = 0; k <= l; ++k) {
        for (Index i = 0; i < K.size(k); ++i) {
            Index v = f.value[k][i];
            if (v == kUnset) {
                rep.violations.push_back({{k, i}, 0, 0,
                                          K.simplex(k, i).str() + " has no Morse value"});
                continue;
            }
            std::size_t u_count = 0, v_count = 0;
            if (k < l)
                for (Index c : K.coface_indices(k, i))
                    if (f.value[k + 1][c] <= v) ++u_count;
            if (k > 0)
                for (Index face : K.face_indices(k, i))
                    if (f.value[k - 1][face] >= v) ++v_count;
            if (u_count > 1 || v_count > 1)
                rep.violations.push_back({{k, i}, u_count, v_count,
                                          K.simplex(k, i).str() + " has #U=" +
                                          std::to_string(u_count) + " #V=" +
                                          std::to_string(v_count)});
            if (u_count == 0 && v_count == 0) {
                rep.critical.push_back({k, i});
                ++rep.critical_count[k];
            }
        }
    }

    BettiVector b = betti_numbers(K);
    rep.beta = b.beta;
    for (int k = 0; k <= l; ++k) {
        long long sign = (k % 2 == 0) ? 1 : -1;
        rep.chi_m += sign * static_cast<long long>(rep.m[k]);
        rep.chi_c += sign * rep.critical_count[k];
        rep.chi_beta += sign * rep.beta[k];
    }
    rep.valid = rep.violations.empty();
    return rep;
}

std::string morse_to_text(const SimplicialNetwork& K, const MorseFiltration& f) {
    std::ostringstream out;
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        const MorseStep& s = f.steps[i];
        out << i;
        if (s.is_pair)
            out << " P " << K.simplex(s.a.dim, s.a.idx).str() << ' '
                << K.simplex(s.b.dim, s.b.idx).str();
        else
            out << " C " << K.simplex(s.a.dim, s.a.idx).str();
        out << '\n';
    }
    return out.str();
}

MorseFiltration morse_from_text(const SimplicialNetwork& K, const std::string& text) {
    int l = K.top_dim();
    MorseFiltration f;
    f.value.resize(l + 1);
    for (int k = 0; k <= l; ++k) f.value[k].assign(K.size(k), kUnset);

    auto locate = [&](const std::string& token) -> SimplexRef {
        Simplex s;
        try {
            s = parse_simplex(token);
        } catch (const InvalidSimplex& e) {
            throw InvalidFiltration(e.what());
        }
        auto idx = K.index_of(s);
        if (!idx) throw InvalidFiltration(s.str() + " is not in the network");
        return {s.dimension(), *idx};
    };

    std::istringstream in(text);
    std::string line;
    std::size_t step_no = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string idx_tok, kind, first, second;
        if (!(ls >> idx_tok)) continue; // blank line
        if (idx_tok[0] == '#') continue;
        if (!(ls >> kind >> first))
            throw InvalidFiltration("step " + std::to_string(step_no) + " is malformed");
        if (idx_tok != std::to_string(step_no))
            throw InvalidFiltration("expected step index " + std::to_string(step_no) +
                                    ", got '" + idx_tok + "'");
        MorseStep step;
        step.a = locate(first);
        if (kind == "P") {
            if (!(ls >> second))
                throw InvalidFiltration("step " + std::to_string(step_no) + " lacks a coface");
            step.is_pair = true;
            step.b = locate(second);
            if (step.b.dim != step.a.dim + 1 ||
                !K.simplex(step.b.dim, step.b.idx).has_face(K.simplex(step.a.dim, step.a.idx)))
                throw InvalidFiltration("step " + std::to_string(step_no) +
                                        " pair is not a (face, coface) pair");
        } else if (kind != "C") {
            throw InvalidFiltration("unknown step kind '" + kind + "'");
        }
        if (ls >> second && second[0] != '#')
            throw InvalidFiltration("step " + std::to_string(step_no) + " has trailing tokens");
        auto assign = [&](SimplexRef r) {
            if (f.value[r.dim][r.idx] != kUnset)
                throw InvalidFiltration(K.simplex(r.dim, r.idx).str() + " appears twice");
            f.value[r.dim][r.idx] = static_cast<Index>(step_no);
        };
        assign(step.a);
        if (step.is_pair) assign(step.b);
        f.steps.push_back(step);
        ++step_no;
    }
    for (int k = 0; k <= l; ++k)
        for (Index i = 0; i < K.size(k); ++i)
            if (f.value[k][i] == kUnset)
                throw InvalidFiltration(K.simplex(k, i).str() + " has no step");
    return f;
}

} // namespace treeph
