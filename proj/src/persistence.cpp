#include "treeph/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "treeph/errors.hpp"
#include "treeph/gf2.hpp"

namespace treeph {

FiltrationOrder order_from_morse(const SimplicialNetwork& K, const MorseFiltration& f) {
    (void)K;
    FiltrationOrder order;
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        const MorseStep& s = f.steps[i];
        double v = static_cast<double>(i);
        order.entries.push_back({s.a, v});
        if (s.is_pair) order.entries.push_back({s.b, v});
    }
    return order;
}

FiltrationOrder order_from_values(const SimplicialNetwork& K,
                                  const std::vector<std::vector<double>>& values) {
    int l = K.top_dim();
    if (values.size() != static_cast<std::size_t>(l + 1))
        throw InvalidFiltration("value table does not cover the network");
    for (int k = 0; k <= l; ++k)
        if (values[k].size() != K.size(k))
            throw InvalidFiltration("value table does not cover order " + std::to_string(k));
    for (int k = 1; k <= l; ++k)
        for (Index i = 0; i < K.size(k); ++i)
            for (Index face : K.face_indices(k, i))
                if (values[k - 1][face] > values[k][i])
                    throw InvalidFiltration(K.simplex(k, i).str() +
                                            " precedes its face " +
                                            K.simplex(k - 1, face).str());
    FiltrationOrder order;
    for (int k = 0; k <= l; ++k)
        for (Index i = 0; i < K.size(k); ++i)
            order.entries.push_back({{k, i}, values[k][i]});
    std::stable_sort(order.entries.begin(), order.entries.end(),
                     [](const FiltrationEntry& a, const FiltrationEntry& b) {
                         if (a.value != b.value) return a.value < b.value;
                         if (a.simplex.dim != b.simplex.dim) return a.simplex.dim < b.simplex.dim;
                         return a.simplex.idx < b.simplex.idx;
                     });
    return order;
}

Barcode persistence_pairs(const SimplicialNetwork& K, const FiltrationOrder& order) {
    int l = K.top_dim();
    std::size_t n = K.total_size();
    if (order.entries.size() != n)
        throw InvalidFiltration("order must list every simplex exactly once");

    std::vector<std::vector<Index>> pos(l + 1);
    for (int k = 0; k <= l; ++k) pos[k].assign(K.size(k), std::numeric_limits<Index>::max());
    double prev = -std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < n; ++p) {
        const FiltrationEntry& e = order.entries[p];
        if (e.simplex.dim < 0 || e.simplex.dim > l || e.simplex.idx >= K.size(e.simplex.dim))
            throw InvalidFiltration("order entry " + std::to_string(p) + " is unknown");
        if (pos[e.simplex.dim][e.simplex.idx] != std::numeric_limits<Index>::max())
            throw InvalidFiltration(K.simplex(e.simplex.dim, e.simplex.idx).str() +
                                    " appears twice");
        if (e.value < prev)
            throw InvalidFiltration("filtration values decrease at entry " + std::to_string(p));
        prev = e.value;
        pos[e.simplex.dim][e.simplex.idx] = static_cast<Index>(p);
    }

    Gf2Eliminator elim(static_cast<Index>(n));
    std::vector<long long> killer_of(n, -1);
    std::vector<char> is_creator(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
        const SimplexRef s = order.entries[p].simplex;
        std::vector<Index> col;
        for (Index face : K.face_indices(s.dim, s.idx)) {
            Index fp = pos[s.dim - 1][face];
            if (fp >= p)
                throw InvalidFiltration(K.simplex(s.dim, s.idx).str() + " precedes its face " +
                                        K.simplex(s.dim - 1, face).str());
            col.push_back(fp);
        }
        std::sort(col.begin(), col.end());
        auto low = elim.add_column(col);
        if (low)
            killer_of[*low] = static_cast<long long>(p);
        else
            is_creator[p] = 1;
    }

    Barcode b;
    for (std::size_t p = 0; p < n; ++p) {
        if (!is_creator[p]) continue;
        const FiltrationEntry& birth = order.entries[p];
        Bar bar;
        bar.dim = birth.simplex.dim;
        bar.birth = birth.value;
        bar.birth_simplex = birth.simplex;
        if (killer_of[p] >= 0) {
            const FiltrationEntry& death = order.entries[killer_of[p]];
            bar.death = death.value;
            bar.death_simplex = death.simplex;
            (bar.birth == *bar.death ? b.instant : b.bars).push_back(bar);
        } else {
            b.bars.push_back(bar);
        }
    }
    auto key = [](const Bar& bar) {
        double death = bar.death ? *bar.death : std::numeric_limits<double>::infinity();
        return std::tuple<int, double, double, Index>(bar.dim, bar.birth, death,
                                                      bar.birth_simplex.idx);
    };
    auto by_key = [&](const Bar& a, const Bar& c) { return key(a) < key(c); };
    std::sort(b.bars.begin(), b.bars.end(), by_key);
    std::sort(b.instant.begin(), b.instant.end(), by_key);
    return b;
}

namespace {

std::string fmt_value(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        std::ostringstream out;
        out << static_cast<long long>(v);
        return out.str();
    }
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

nlohmann::json bar_json(const SimplicialNetwork& K, const Bar& bar) {
    nlohmann::json j;
    j["dim"] = bar.dim;
    j["birth"] = bar.birth;
    j["birth_simplex"] = K.simplex(bar.birth_simplex.dim, bar.birth_simplex.idx).str();
    if (bar.death) {
        j["death"] = *bar.death;
        j["death_simplex"] = K.simplex(bar.death_simplex->dim, bar.death_simplex->idx).str();
    } else {
        j["death"] = nullptr;
    }
    return j;
}

std::string barcode_svg(const Barcode& b) {
    double lo = 0.0, hi = 1.0;
    bool seen = false;
    for (const Bar& bar : b.bars) {
        lo = seen ? std::min(lo, bar.birth) : bar.birth;
        hi = seen ? std::max(hi, bar.birth) : bar.birth;
        seen = true;
        if (bar.death) hi = std::max(hi, *bar.death);
    }
    if (!seen) { lo = 0.0; hi = 1.0; }
    if (hi <= lo) hi = lo + 1.0;

    const double left = 60, right = 40, top = 20, lane = 18;
    const double plot_w = 480;
    double width = left + plot_w + right;
    double height = top * 2 + lane * std::max<std::size_t>(b.bars.size(), 1);
    auto sx = [&](double v) { return left + (v - lo) / (hi - lo) * plot_w; };
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b"};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    std::size_t row = 0;
    for (const Bar& bar : b.bars) {
        double y = top + lane * (0.5 + row++);
        const char* color = palette[bar.dim % 6];
        double x0 = sx(bar.birth);
        double x1 = bar.death ? sx(*bar.death) : left + plot_w;
        out << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x1 << "\" y2=\""
            << y << "\" stroke=\"" << color << "\" stroke-width=\"4\"/>\n";
        if (!bar.death)
            out << "<polygon points=\"" << x1 << ',' << y - 5 << ' ' << x1 << ',' << y + 5
                << ' ' << x1 + 10 << ',' << y << "\" fill=\"" << color << "\"/>\n";
        out << "<text x=\"" << 6 << "\" y=\"" << y + 4
            << "\" font-family=\"monospace\" font-size=\"11\">dim " << bar.dim
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string export_barcode(const SimplicialNetwork& K, const Barcode& b,
                           const std::string& format) {
    if (format == "text") {
        std::ostringstream out;
        for (const Bar& bar : b.bars) {
            out << bar.dim << ' ' << fmt_value(bar.birth) << ' '
                << (bar.death ? fmt_value(*bar.death) : std::string("inf")) << '\n';
        }
        return out.str();
    }
    if (format == "structured") {
        nlohmann::json doc;
        doc["bars"] = nlohmann::json::array();
        doc["instant"] = nlohmann::json::array();
        for (const Bar& bar : b.bars) doc["bars"].push_back(bar_json(K, bar));
        for (const Bar& bar : b.instant) doc["instant"].push_back(bar_json(K, bar));
        return doc.dump(2) + "\n";
    }
    if (format == "svg") return barcode_svg(b);
    throw FormatError("unknown barcode format '" + format + "'");
}

} // namespace treeph
