#include "treeph/simplex.hpp"

#include <algorithm>
#include <cctype>

#include "treeph/errors.hpp"

namespace treeph {

bool Simplex::contains(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::has_face(const Simplex& other) const {
    return std::includes(verts_.begin(), verts_.end(),
                         other.verts_.begin(), other.verts_.end());
}

Simplex Simplex::face_dropping(std::size_t p) const {
    std::vector<VertexId> out;
    out.reserve(verts_.size() - 1);
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (i != p) out.push_back(verts_[i]);
    return Simplex(std::move(out));
}

std::string Simplex::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(verts_[i]);
    }
    out += ')';
    return out;
}

Simplex make_simplex(std::span<const VertexId> vertex_list) {
    if (vertex_list.empty()) throw InvalidSimplex("simplex needs at least one vertex");
    std::vector<VertexId> v(vertex_list.begin(), vertex_list.end());
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw InvalidSimplex("duplicate vertex in simplex");
    return Simplex(std::move(v));
}

Simplex make_simplex(std::initializer_list<VertexId> vertex_list) {
    return make_simplex(std::span<const VertexId>(vertex_list.begin(), vertex_list.size()));
}

std::vector<Simplex> faces(const Simplex& s) {
    std::vector<Simplex> out;
    if (s.dimension() <= 0) return out;
    out.reserve(s.vertex_count());
    for (std::size_t p = 0; p < s.vertex_count(); ++p)
        out.push_back(s.face_dropping(p));
    return out;
}

Simplex parse_simplex(const std::string& text) {
    std::vector<VertexId> v;
    std::size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool parens = i < n && text[i] == '(';
    if (parens) ++i;
    for (;;) {
        skip_ws();
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidSimplex("expected vertex id in '" + text + "'");
        unsigned long long x = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            x = x * 10 + (text[i] - '0');
            if (x > 0xffffffffull) throw InvalidSimplex("vertex id out of range");
            ++i;
        }
        v.push_back(static_cast<VertexId>(x));
        skip_ws();
        if (i < n && text[i] == ',') { ++i; continue; }
        break;
    }
    if (parens) {
        if (i >= n || text[i] != ')') throw InvalidSimplex("missing ')' in '" + text + "'");
        ++i;
    }
    skip_ws();
    if (i != n) throw InvalidSimplex("trailing characters in '" + text + "'");
    return make_simplex(v);
}

} // namespace treeph
