import pytest

from core.exceptions import InternalError
from apps.psl2 import ZERO
from apps.farey import FareySymbol, Pairing, cusp_partition, doubled_vertex_widths, invariants, parse_symbol
from apps.farey.invariants import UnionFind


def test_union_find_groups():
    uf = UnionFind(6)
    uf.union(0, 5)
    uf.union(3, 1)
    uf.union(1, 0)
    assert uf.find(3) == uf.find(5)
    assert uf.groups() == [[0, 1, 3, 5], [2], [4]]


def test_psl2_invariants(psl2_symbol):
    inv = invariants(psl2_symbol)
    assert (inv.index, inv.genus, inv.cusps, inv.rank, inv.e2, inv.e3, inv.level) == (1, 0, 1, 0, 1, 1, 1)
    assert inv.cusp_widths() == [1]


def test_gamma_squared_invariants(gamma_squared_symbol):
    inv = invariants(gamma_squared_symbol)
    assert (inv.index, inv.genus, inv.cusps, inv.e2, inv.e3, inv.level) == (2, 0, 1, 0, 2, 2)
    assert inv.cusp_widths() == [2]


def test_gamma2_invariants(gamma2_symbol):
    inv = invariants(gamma2_symbol)
    assert (inv.index, inv.genus, inv.cusps, inv.rank, inv.e2, inv.e3, inv.level) == (6, 0, 3, 2, 0, 0, 2)
    assert inv.cusp_widths() == [2, 2, 2]
    assert [c.vertices for c in inv.cusp_classes] == [["oo"], ["0", "2"], ["1"]]


def test_gamma0_2_cusp_classes():
    F = parse_symbol("[-oo 0 1 oo | 1 e 1]")
    uf = cusp_partition(F)
    assert uf.groups() == [[0, 3], [1, 2]]
    assert doubled_vertex_widths(F) == [2, 2, 2, 0]
    inv = invariants(F)
    assert [(c.vertices, c.width) for c in inv.cusp_classes] == [(["oo"], 1), (["0", "1"], 2)]
    assert inv.index == 3 and inv.level == 2


def test_odd_edges_add_half_widths():
    F = parse_symbol("[-oo 0 1 oo | o 1 1]")
    inv = invariants(F)
    assert inv.e3 == 1
    assert inv.index == 4
    assert inv.cusp_widths() == [1, 3]


def test_index_formulas_agree(gamma2_symbol):
    inv = invariants(gamma2_symbol)
    F = gamma2_symbol
    assert inv.index == 3 * F.n + F.e3
    assert inv.index == 3 * inv.e2 + 4 * inv.e3 + 12 * inv.genus + 6 * inv.cusps - 12
    assert sum(c.width for c in inv.cusp_classes) == inv.index


def test_degenerate_symbol_raises_internal_error():
    F = FareySymbol((ZERO,), (Pairing.free(1), Pairing.free(1)))
    with pytest.raises(InternalError):
        invariants(F)
