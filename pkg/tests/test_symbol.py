import pytest

from core.exceptions import ParameterError, SymbolError
from apps.psl2 import ExtFraction, ZERO
from apps.farey import EVEN, ODD, FareySymbol, Pairing, PairingKind, format_symbol, parse_symbol

from .conftest import GAMMA2_TEXT


def test_parse_gamma2(gamma2_symbol):
    F = gamma2_symbol
    assert F.vertices == (ZERO, ExtFraction(1, 1), ExtFraction(2, 1))
    assert F.n == 2
    assert F.edge_count == 4
    assert [p.kind for p in F.pairings] == [PairingKind.FREE] * 4
    assert F.free_pairs() == [(0, 3), (1, 2)]
    assert F.partner(1) == 2
    assert F.r == 2 and F.e2 == 0 and F.e3 == 0


def test_format_round_trip(gamma2_symbol):
    assert format_symbol(gamma2_symbol) == GAMMA2_TEXT
    assert parse_symbol(str(gamma2_symbol)) == gamma2_symbol


def test_base_symbols_text(psl2_symbol, gamma_squared_symbol):
    assert str(psl2_symbol) == "[-oo 0 oo | e o]"
    assert str(gamma_squared_symbol) == "[-oo 0 oo | o o]"
    assert parse_symbol("[-oo 0 oo | e o]") == psl2_symbol


def test_parse_tolerates_whitespace():
    F = parse_symbol("  [ -oo   0  1 oo |1 e   1 ]  ")
    assert str(F) == "[-oo 0 1 oo | 1 e 1]"
    assert F.pairings[1] == EVEN


@pytest.mark.parametrize("text", [
    "-oo 0 oo | e o",
    "[-oo 0 oo e o]",
    "[0 oo | e o]",
    "[-oo oo | e]",
    "[-oo 0 oo | e x]",
    "[-oo 0 oo | e 0]",
    "[-oo 0 oo | ¹ ¹]",
    "[-oo 0 1/0 oo | e o e]",
])
def test_grammar_errors(text):
    with pytest.raises(SymbolError):
        parse_symbol(text)


def test_adjacency_error_reports_edge():
    with pytest.raises(SymbolError) as info:
        parse_symbol("[-oo 0 2 oo | 1 e 1]")
    assert info.value.edge == 1


def test_zero_must_be_a_vertex():
    with pytest.raises(SymbolError):
        parse_symbol("[-oo 1 oo | e o]")


def test_free_label_must_appear_twice():
    with pytest.raises(SymbolError) as info:
        parse_symbol("[-oo 0 1 oo | 1 e 2]")
    assert info.value.edge == 0


def test_pairing_count_must_match():
    with pytest.raises(SymbolError):
        parse_symbol("[-oo 0 1 oo | e e]")


def test_degenerate_symbol_is_rejected():
    with pytest.raises(SymbolError):
        parse_symbol("[-oo 0 oo | 1 1]")


def test_direct_construction_validates():
    with pytest.raises(SymbolError):
        FareySymbol((ZERO,), (EVEN,))
    F = FareySymbol((ZERO,), (Pairing.free(3), Pairing.free(3)))
    assert F.partner(0) == 1


def test_edge_index_out_of_range(psl2_symbol):
    with pytest.raises(ParameterError):
        psl2_symbol.edge(2)
    assert psl2_symbol.edge(1) == (ZERO, psl2_symbol.sequence[-1])
    assert psl2_symbol.pairings[1] == ODD
