#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "treeph/cavity.hpp"
#include "treeph/ingest.hpp"
#include "treeph/morse.hpp"
#include "treeph/network.hpp"
#include "treeph/persistence.hpp"
#include "treeph/version.hpp"

namespace py = pybind11;
using namespace treeph;

namespace {

SimplicialNetwork complex_from_simplices(const std::vector<std::vector<VertexId>>& listed) {
    std::vector<Simplex> simplices;
    simplices.reserve(listed.size());
    for (const auto& vs : listed) simplices.push_back(make_simplex(vs));
    return explicit_complex(simplices);
}

py::dict betti_dict(const SimplicialNetwork& K) {
    BettiVector bv = betti_numbers(K);
    py::dict d;
    d["m"] = bv.m;
    d["rank"] = bv.rank;
    d["beta"] = bv.beta;
    d["chi"] = bv.chi;
    return d;
}

std::vector<std::vector<VertexId>> cycle_vertices(const SimplicialNetwork& K,
                                                  const RepresentativeCycle& c) {
    std::vector<std::vector<VertexId>> out;
    out.reserve(c.members.size());
    for (Index i : c.members) out.push_back(K.simplex(c.dim, i).vertices());
    return out;
}

} // namespace

PYBIND11_MODULE(_treeph, m) {
    m.doc() = "persistent homology of simplicial networks by spanning trees and critical simplices";
    m.attr("__version__") = kVersion;

    py::class_<SimplicialNetwork>(m, "SimplicialNetwork")
        .def("top_dim", &SimplicialNetwork::top_dim)
        .def("size", &SimplicialNetwork::size, py::arg("k"))
        .def("simplex_counts", &SimplicialNetwork::simplex_counts)
        .def("total_size", &SimplicialNetwork::total_size)
        .def("__repr__", [](const SimplicialNetwork& K) {
            std::string s = "SimplicialNetwork(m=[";
            for (int k = 0; k <= K.top_dim(); ++k)
                s += (k ? "," : "") + std::to_string(K.size(k));
            return s + "])";
        });

    m.def("complex_from_simplices", &complex_from_simplices, py::arg("simplices"),
          "Explicit complex (downward closure) of the listed simplices.");
    m.def(
        "parse_simplex_list", [](const std::string& text) { return parse_simplex_list(text); },
        py::arg("text"), "One simplex per line, comma-separated vertex ids.");
    m.def("betti_numbers", &betti_dict, py::arg("network"),
          "dict with per-dimension m, spanning-tree ranks, Betti numbers, and chi.");
    m.def(
        "morse_filtration",
        [](const SimplicialNetwork& K) {
            TreeDecomposition decomp = classify(K);
            MorseFiltration f = assign_morse(K, decomp);
            MorseValidationReport rep = validate_morse(K, f);
            py::dict d;
            d["text"] = morse_to_text(K, f);
            d["n"] = f.n();
            d["critical_count"] = rep.critical_count;
            d["valid"] = rep.valid;
            d["promotions"] = rep.promotions;
            return d;
        },
        py::arg("network"), "Optimal discrete Morse filtration and its validation summary.");
    m.def(
        "barcode",
        [](const SimplicialNetwork& K) {
            TreeDecomposition decomp = classify(K);
            MorseFiltration f = assign_morse(K, decomp);
            Barcode bc = persistence_pairs(K, order_from_morse(K, f));
            std::vector<std::tuple<int, double, std::optional<double>>> out;
            out.reserve(bc.bars.size());
            for (const Bar& b : bc.bars) out.emplace_back(b.dim, b.birth, b.death);
            return out;
        },
        py::arg("network"), "Bars of the Morse filtration as (dim, birth, death-or-None).");
    m.def(
        "cavities",
        [](const SimplicialNetwork& K) {
            TreeDecomposition decomp = classify(K);
            CavityBasis basis = solve_all_cavities(K, decomp);
            std::vector<std::pair<int, std::vector<std::vector<VertexId>>>> out;
            for (int k = 0; k <= basis.top_dim(); ++k)
                for (const RepresentativeCycle& c : basis.cycles[k])
                    out.emplace_back(k, cycle_vertices(K, c));
            return out;
        },
        py::arg("network"),
        "One representative cycle per cavity as (dim, [simplex vertex lists]).");
}
