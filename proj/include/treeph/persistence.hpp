#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treeph/morse.hpp"
#include "treeph/network.hpp"

namespace treeph {

/// A total order over all simplices of K with non-decreasing real
/// filtration values and faces before cofaces.
struct FiltrationEntry {
    SimplexRef simplex;
    double value = 0.0;
};

struct FiltrationOrder {
    std::vector<FiltrationEntry> entries;
};

/// Order induced by a Morse filtration: by step index, face before
/// coface within a pair; value = step index.
FiltrationOrder order_from_morse(const SimplicialNetwork& K, const MorseFiltration& f);

/// Order induced by per-simplex real values (e.g. a distance
/// filtration): sorted by (value, dimension, lexicographic simplex).
/// values[k][i] must be monotone (face <= coface).
FiltrationOrder order_from_values(const SimplicialNetwork& K,
                                  const std::vector<std::vector<double>>& values);

struct Bar {
    int dim = 0;
    double birth = 0.0;
    std::optional<double> death;          // nullopt = infinite bar
    SimplexRef birth_simplex;
    std::optional<SimplexRef> death_simplex;
};

struct Barcode {
    std::vector<Bar> bars;     // birth < death, plus infinite bars
    std::vector<Bar> instant;  // zero-persistence pairs (birth == death)
};

/// Standard boundary-matrix column reduction in filtration order.
/// Throws InvalidFiltration when the order violates faces-before-cofaces
/// or does not cover K exactly once.
Barcode persistence_pairs(const SimplicialNetwork& K, const FiltrationOrder& order);

/// Renders the barcode. Formats: "text" (one bar per line
/// `k birth death|inf`), "structured" (JSON document), "svg"
/// (self-contained plot, infinite bars with arrowheads).
/// Unknown format -> FormatError.
std::string export_barcode(const SimplicialNetwork& K, const Barcode& b,
                           const std::string& format);

} // namespace treeph
