#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace treeph {

using VertexId = std::uint32_t;
using Index = std::uint32_t;

/// A simplex as its strictly increasing vertex tuple. Dimension is
/// (number of vertices - 1); equality and ordering are lexicographic
/// on the vertex sequence.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<VertexId> sorted_vertices)
        : verts_(std::move(sorted_vertices)) {}

    int dimension() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t vertex_count() const { return verts_.size(); }
    const std::vector<VertexId>& vertices() const { return verts_; }
    VertexId vertex(std::size_t i) const { return verts_[i]; }

    bool contains(VertexId v) const;
    bool has_face(const Simplex& other) const; // other ⊆ this

    /// The codimension-1 face with vertex position p removed.
    Simplex face_dropping(std::size_t p) const;

    std::string str() const; // "(1,2,5)"

    auto operator<=>(const Simplex&) const = default;

private:
    std::vector<VertexId> verts_;
};

/// Canonicalizes (sorts) a vertex list. Throws InvalidSimplex on an
/// empty list or a duplicate vertex.
Simplex make_simplex(std::span<const VertexId> vertex_list);
Simplex make_simplex(std::initializer_list<VertexId> vertex_list);

/// All codimension-1 faces, in order of deleted position p = 0..k.
/// A vertex has no faces; the list is empty.
std::vector<Simplex> faces(const Simplex& s);

/// Parses "(1,2,5)" or "1,2,5" back into a canonical simplex.
Simplex parse_simplex(const std::string& text);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ull;
        for (VertexId v : s.vertices()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace treeph
