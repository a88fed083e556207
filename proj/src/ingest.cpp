#include "treeph/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "treeph/errors.hpp"

namespace treeph {

namespace {

/// Calls fn(line, line_no) for every line, with '#'/'%' comments
/// stripped, surrounding whitespace trimmed, and blank lines skipped.
template <typename Fn>
void for_each_data_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++line_no;
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        if (std::size_t c = line.find_first_of("#%"); c != std::string_view::npos) line = line.substr(0, c);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
        if (!line.empty()) fn(line, line_no);
    }
}

std::vector<std::string_view> split_tokens(std::string_view line, char delimiter) {
    std::vector<std::string_view> out;
    if (delimiter == '\0') {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) out.push_back(line.substr(i, j - i));
            i = j;
        }
    } else {
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == delimiter) {
                std::string_view tok = line.substr(start, i - start);
                while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
                while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
                out.push_back(tok);
                start = i + 1;
            }
        }
        while (!out.empty() && out.back().empty()) out.pop_back();
    }
    return out;
}

bool parse_u64(std::string_view tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

double parse_double_or_throw(std::string_view tok, std::size_t line_no) {
    double out = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("bad number '" + std::string(tok) + "'", line_no);
    if (!std::isfinite(out)) throw ParseError("non-finite coordinate", line_no);
    return out;
}

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

/// Uniform draw in [0, n) by rejection; mt19937_64's sequence is fixed
/// by the standard, so results are identical across platforms.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

} // namespace

Graph parse_edge_list(std::string_view text, const EdgeListOptions& options, EdgeListStats* stats) {
    struct RawEdge {
        std::string u, v;
        std::size_t line;
    };
    std::vector<RawEdge> raw;
    bool all_numeric = true;
    EdgeListStats local;

    for_each_data_line(text, [&](std::string_view line, std::size_t line_no) {
        auto toks = split_tokens(line, options.delimiter);
        if (toks.size() < 2) throw ParseError("expected 'u v [weight]'", line_no);
        if (toks.size() > 3) throw ParseError("too many fields", line_no);
        std::uint64_t tmp;
        if (!parse_u64(toks[0], tmp) || !parse_u64(toks[1], tmp)) all_numeric = false;
        raw.push_back({std::string(toks[0]), std::string(toks[1]), line_no});
        ++local.lines;
    });

    // Dense ids in sorted label order: numeric when every id parses as an
    // integer, lexicographic otherwise.
    std::map<std::string, VertexId> id_of;
    std::vector<std::string> labels;
    {
        std::vector<std::string> all;
        all.reserve(raw.size() * 2);
        for (const auto& e : raw) {
            all.push_back(e.u);
            all.push_back(e.v);
        }
        if (all_numeric) {
            std::vector<std::uint64_t> nums;
            nums.reserve(all.size());
            for (const auto& s : all) {
                std::uint64_t x;
                parse_u64(s, x);
                nums.push_back(x);
            }
            std::sort(nums.begin(), nums.end());
            nums.erase(std::unique(nums.begin(), nums.end()), nums.end());
            for (std::uint64_t x : nums) labels.push_back(std::to_string(x));
        } else {
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            labels = std::move(all);
        }
        for (std::size_t i = 0; i < labels.size(); ++i) id_of[labels[i]] = static_cast<VertexId>(i);
    }

    auto canon = [&](const std::string& s) {
        if (!all_numeric) return id_of.at(s);
        std::uint64_t x;
        parse_u64(s, x);
        return id_of.at(std::to_string(x));
    };

    Graph g(labels.size());
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& e : raw) {
        VertexId u = canon(e.u), v = canon(e.v);
        if (u == v) {
            ++local.self_loops_dropped;
            continue;
        }
        std::pair<VertexId, VertexId> key = options.symmetrize
                                                ? std::pair{std::min(u, v), std::max(u, v)}
                                                : std::pair{u, v};
        if (!seen.insert(key).second) {
            ++local.duplicates_dropped;
            continue;
        }
        g.add_edge(u, v);
    }
    g.set_labels(std::move(labels));
    g.finalize();
    if (stats) *stats = local;
    return g;
}

SimplicialNetwork parse_simplex_list(std::string_view text) {
    std::vector<Simplex> listed;
    for_each_data_line(text, [&](std::string_view line, std::size_t line_no) {
        try {
            listed.push_back(parse_simplex(std::string(line)));
        } catch (const InvalidSimplex& e) {
            throw ParseError(e.what(), line_no);
        }
    });
    return explicit_complex(listed);
}

PointCloud parse_point_cloud(std::string_view text) {
    PointCloud cloud;
    for_each_data_line(text, [&](std::string_view line, std::size_t line_no) {
        std::vector<double> p;
        for (std::string_view tok : split_tokens(line, '\0')) p.push_back(parse_double_or_throw(tok, line_no));
        if (p.empty()) throw ParseError("empty point", line_no);
        if (!cloud.points.empty() && p.size() != cloud.dim())
            throw ParseError("point dimension mismatch", line_no);
        cloud.points.push_back(std::move(p));
    });
    return cloud;
}

VietorisRips vr_complex(const PointCloud& cloud, double epsilon, int max_dim) {
    if (epsilon < 0) throw DimensionError("vr_complex: epsilon must be >= 0");
    const std::size_t n = cloud.size();
    Graph g(n);
    const double eps2 = epsilon * epsilon;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (squared_distance(cloud.points[i], cloud.points[j]) <= eps2)
                g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    g.finalize();

    VietorisRips out;
    out.network = clique_complex(g, max_dim);
    out.values.resize(out.network.top_dim() + 1);
    for (int k = 0; k <= out.network.top_dim(); ++k) {
        const auto& reg = out.network.simplices(k);
        out.values[k].resize(reg.size(), 0.0);
        if (k == 0) continue;
        for (std::size_t i = 0; i < reg.size(); ++i) {
            const auto& vs = reg[i].vertices();
            double worst = 0;
            for (std::size_t a = 0; a < vs.size(); ++a)
                for (std::size_t b = a + 1; b < vs.size(); ++b)
                    worst = std::max(worst, squared_distance(cloud.points[vs[a]], cloud.points[vs[b]]));
            out.values[k][i] = std::sqrt(worst);
        }
    }
    return out;
}

Graph ba_generate(const BAConfig& cfg) {
    if (cfg.n_final < 2) throw DimensionError("ba_generate: n_final must be >= 2");
    if (cfg.m_attach < 1) throw DimensionError("ba_generate: m_attach must be >= 1");

    std::mt19937_64 rng(cfg.seed);
    Graph g(cfg.n_final);
    // One entry per edge endpoint; drawing an index uniformly samples a
    // node with probability proportional to its degree.
    std::vector<VertexId> endpoint;

    for (std::size_t t = 2; t < cfg.n_final; ++t) {
        const std::size_t want = std::min(cfg.m_attach, t);
        std::vector<VertexId> targets;
        while (targets.size() < want) {
            VertexId cand = endpoint.empty()
                                ? static_cast<VertexId>(draw_below(rng, t))
                                : endpoint[draw_below(rng, endpoint.size())];
            if (std::find(targets.begin(), targets.end(), cand) == targets.end())
                targets.push_back(cand);
        }
        for (VertexId v : targets) {
            g.add_edge(static_cast<VertexId>(t), v);
            endpoint.push_back(static_cast<VertexId>(t));
            endpoint.push_back(v);
        }
    }
    g.finalize();
    return g;
}

std::string save_network(const SimplicialNetwork& K, const std::vector<std::vector<double>>* values) {
    if (values) {
        if (static_cast<int>(values->size()) != K.top_dim() + 1)
            throw DimensionError("save_network: values shape mismatch");
        for (int k = 0; k <= K.top_dim(); ++k)
            if ((*values)[k].size() != K.size(k))
                throw DimensionError("save_network: values shape mismatch");
    }
    nlohmann::json doc;
    doc["format"] = "treeph-network";
    doc["version"] = 1;
    doc["dimensions"] = nlohmann::json::array();
    for (int k = 0; k <= K.top_dim(); ++k) {
        nlohmann::json entry;
        entry["dim"] = k;
        auto simplices = nlohmann::json::array();
        for (const Simplex& s : K.simplices(k)) simplices.push_back(s.vertices());
        entry["simplices"] = std::move(simplices);
        if (values) entry["values"] = (*values)[k];
        doc["dimensions"].push_back(std::move(entry));
    }
    if (!K.vertex_labels().empty()) doc["labels"] = K.vertex_labels();
    return doc.dump(2) + "\n";
}

LoadedNetwork load_network(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("network document: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != "treeph-network")
        throw FormatError("network document: missing format tag");
    if (doc.value("version", 0) != 1) throw FormatError("network document: unsupported version");
    if (!doc.contains("dimensions") || !doc["dimensions"].is_array())
        throw FormatError("network document: missing dimensions");

    LoadedNetwork out;
    std::vector<std::vector<Simplex>> regs;
    std::vector<std::vector<double>> values;
    bool any_values = false;
    for (const auto& entry : doc["dimensions"]) {
        if (!entry.is_object() || !entry.contains("dim") || !entry.contains("simplices"))
            throw FormatError("network document: malformed dimension entry");
        int k = entry["dim"].get<int>();
        if (k != static_cast<int>(regs.size())) throw FormatError("network document: dims not consecutive");
        std::vector<Simplex> reg;
        for (const auto& arr : entry["simplices"]) {
            std::vector<VertexId> vs;
            for (const auto& x : arr) vs.push_back(x.get<VertexId>());
            Simplex s;
            try {
                s = make_simplex(vs);
            } catch (const InvalidSimplex& e) {
                throw FormatError(std::string("network document: ") + e.what());
            }
            if (s.dimension() != k) throw FormatError("network document: simplex dimension mismatch");
            if (!reg.empty() && !(reg.back() < s))
                throw FormatError("network document: simplices not in canonical order");
            reg.push_back(std::move(s));
        }
        if (entry.contains("values")) {
            any_values = true;
            auto vals = entry["values"].get<std::vector<double>>();
            if (vals.size() != reg.size()) throw FormatError("network document: values shape mismatch");
            values.push_back(std::move(vals));
        } else {
            values.emplace_back();
        }
        regs.push_back(std::move(reg));
    }
    // Downward closure, checked here so a bad file fails loudly at load.
    for (std::size_t k = 1; k < regs.size(); ++k)
        for (const Simplex& s : regs[k])
            for (const Simplex& f : faces(s))
                if (!std::binary_search(regs[k - 1].begin(), regs[k - 1].end(), f))
                    throw FormatError("network document: not downward closed");

    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
    out.network = SimplicialNetwork::from_registries(std::move(regs), std::move(labels));
    if (any_values) {
        if (static_cast<int>(values.size()) != out.network.top_dim() + 1 ||
            [&] {
                for (int k = 0; k <= out.network.top_dim(); ++k)
                    if (values[k].size() != out.network.size(k)) return true;
                return false;
            }())
            throw FormatError("network document: values must cover every dimension");
        out.values = std::move(values);
    }
    return out;
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw Error("cannot read file: " + path);
    return std::move(ss).str();
}

void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open file for writing: " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out.good()) throw Error("cannot write file: " + path);
}

} // namespace treeph
