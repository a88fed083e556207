"""Persistent homology of simplicial networks by spanning trees and critical simplices."""

from ._treeph import (
    SimplicialNetwork,
    __version__,
    barcode,
    betti_numbers,
    cavities,
    complex_from_simplices,
    morse_filtration,
    parse_simplex_list,
)

__all__ = [
    "SimplicialNetwork",
    "__version__",
    "barcode",
    "betti_numbers",
    "cavities",
    "complex_from_simplices",
    "morse_filtration",
    "parse_simplex_list",
]
