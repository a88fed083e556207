import pathlib

import pytest

import treeph

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


@pytest.fixture(scope="module")
def torus():
    return treeph.parse_simplex_list((DATA / "torus.simplices").read_text())


def test_version():
    assert treeph.__version__ == "0.1.0"


def test_network_surface(torus):
    assert torus.top_dim() == 2
    assert torus.simplex_counts() == [9, 27, 18]
    assert torus.size(1) == 27
    assert torus.size(7) == 0
    assert torus.total_size() == 54
    assert repr(torus) == "SimplicialNetwork(m=[9,27,18])"


def test_betti(torus):
    got = treeph.betti_numbers(torus)
    assert got["m"] == [9, 27, 18]
    assert got["rank"] == [0, 8, 17, 0]
    assert got["beta"] == [1, 2, 1]
    assert got["chi"] == 0


def test_morse_filtration(torus):
    f = treeph.morse_filtration(torus)
    assert f["n"] == 28
    assert f["critical_count"] == [1, 2, 1]
    assert f["valid"] is True
    assert f["promotions"] == 0
    assert f["text"].startswith("0 C (1)\n")


def test_barcode(torus):
    bars = sorted(treeph.barcode(torus))
    assert bars == [(0, 0.0, None), (1, 9.0, None), (1, 10.0, None), (2, 28.0, None)]


def test_cavities(torus):
    cav = treeph.cavities(torus)
    by_dim = {}
    for dim, members in cav:
        by_dim.setdefault(dim, []).append(sorted(tuple(m) for m in members))
    assert len(by_dim[0]) == 1
    assert len(by_dim[1]) == 2
    assert len(by_dim[2]) == 1
    assert [(1, 2), (1, 3), (2, 3)] in by_dim[1]
    assert [(1, 4), (1, 7), (4, 7)] in by_dim[1]
    assert len(by_dim[2][0]) == 18


def test_explicit_complex():
    K = treeph.complex_from_simplices([[1, 2, 3], [3, 4]])
    assert K.simplex_counts() == [4, 4, 1]
    got = treeph.betti_numbers(K)
    assert got["beta"] == [1, 0, 0]


def test_parse_error():
    with pytest.raises(RuntimeError, match="line 1"):
        treeph.parse_simplex_list("1,1,2\n")
