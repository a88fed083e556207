#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treeph/network.hpp"

namespace treeph {

struct PointCloud {
    std::vector<std::vector<double>> points; // all the same dimension

    std::size_t size() const { return points.size(); }
    std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
};

struct EdgeListOptions {
    char delimiter = '\0'; // '\0' = any whitespace run
    int index_base = 0;    // informational; labels preserve the input ids
    bool symmetrize = true;
};

struct EdgeListStats {
    std::size_t lines = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_dropped = 0;
};

/// Parses "u v [weight]" lines ('#' and '%' comments allowed) into an
/// undirected simple graph with dense 0-based ids and a label table.
/// Self-loops and duplicate/reciprocal edges are dropped and counted.
/// Malformed line -> ParseError with line number.
Graph parse_edge_list(std::string_view text, const EdgeListOptions& options = {},
                      EdgeListStats* stats = nullptr);

/// One simplex per line, comma-separated vertex ids; the result is the
/// explicit complex (downward closure) of the parsed list.
SimplicialNetwork parse_simplex_list(std::string_view text);

/// One point per line, whitespace-separated decimals.
PointCloud parse_point_cloud(std::string_view text);

/// Vietoris-Rips: edges at pairwise distance <= epsilon (ties included),
/// higher simplices by clique expansion up to max_dim. values[k][i] is
/// the simplex's filtration value: the maximum pairwise distance among
/// its vertices (0 for vertices).
struct VietorisRips {
    SimplicialNetwork network;
    std::vector<std::vector<double>> values;
};

VietorisRips vr_complex(const PointCloud& cloud, double epsilon, int max_dim);

struct BAConfig {
    std::size_t n_final = 2;    // >= 2
    std::size_t m_attach = 2;   // >= 1
    std::uint64_t seed = 0;
};

/// Preferential-attachment graph from an unconnected two-node seed:
/// each new node draws m_attach distinct targets degree-proportionally
/// (uniform while the graph has no edges). mt19937_64 with explicit
/// rejection sampling, so runs reproduce across platforms.
Graph ba_generate(const BAConfig& cfg);

/// Versioned JSON document with per-dimension simplex arrays and
/// optional per-simplex filtration values.
std::string save_network(const SimplicialNetwork& K,
                         const std::vector<std::vector<double>>* values = nullptr);
struct LoadedNetwork {
    SimplicialNetwork network;
    std::vector<std::vector<double>> values; // empty when absent
};
LoadedNetwork load_network(std::string_view text);

/// FNV-1a 64 content digest, hex encoded (manifest support).
std::string fnv1a64_hex(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

} // namespace treeph
