import pytest

from core.config import settings
from core.exceptions import CapExceededError, ParameterError
from apps.psl2 import ProjectiveMatrix
from apps.farey import generators, invariants, parse_symbol
from apps.groups import Gamma0, Gamma1, GammaFull, PermGroup, SymbolGroup, index_by_bfs
from apps.construction import GAMMA_SQUARED_SYMBOL, PSL2_SYMBOL, construct_symbol
from apps.construction.builder import _construct
from apps.permutations import PermutationPair, parse_cycles, perm_invariants

from .conftest import GAMMA2_TEXT, gamma0_index, random_pair

FAST_CORPUS = [Gamma0(N) for N in range(2, 9)] + [Gamma1(N) for N in range(2, 7)] + [GammaFull(N) for N in range(2, 5)]
SLOW_CORPUS = [Gamma0(N) for N in range(9, 13)] + [Gamma1(N) for N in range(7, 13)] + [GammaFull(N) for N in range(5, 13)]


def _hurwitz_holds(F):
    inv = invariants(F)
    assert F.n + 2 == 2 * inv.rank + inv.e2 + inv.e3
    assert 3 * F.n + F.e3 == inv.index
    assert 3 * inv.e2 + 4 * inv.e3 + 12 * inv.genus + 6 * inv.cusps - 12 == inv.index


def test_base_cases():
    assert construct_symbol(Gamma0(1)) == PSL2_SYMBOL
    assert construct_symbol(GammaFull(1)) == PSL2_SYMBOL
    gamma_squared = PermutationPair(parse_cycles("(1 2)"), parse_cycles("()", 2))
    assert construct_symbol(PermGroup(gamma_squared)) == GAMMA_SQUARED_SYMBOL


def test_gamma2_golden():
    F = construct_symbol(GammaFull(2), insertion="rightmost")
    assert F == parse_symbol(GAMMA2_TEXT)
    inv = invariants(F)
    assert (inv.index, inv.cusps, inv.genus, inv.e2, inv.e3, inv.level) == (6, 3, 0, 0, 0, 2)
    assert inv.cusp_widths() == [2, 2, 2]


def test_default_insertion_is_rightmost():
    assert settings.MEDIANT_INSERTION == "rightmost"
    assert construct_symbol(GammaFull(2)) == parse_symbol(GAMMA2_TEXT)


def test_gamma2_generators_up_to_inverse():
    expected = {ProjectiveMatrix.of(1, 2, 0, 1), ProjectiveMatrix.of(3, -2, 2, -1)}
    F = construct_symbol(GammaFull(2), insertion="rightmost")
    assert {g if g in expected else g.inverse() for g in generators(F)} == expected
    F = construct_symbol(GammaFull(2), insertion="leftmost")
    assert str(F) == "[-oo -1 0 1 oo | 1 2 2 1]"


def test_gamma0_2_symbol():
    assert str(construct_symbol(Gamma0(2))) == "[-oo 0 1 oo | 1 e 1]"


@pytest.mark.parametrize("N", range(2, 21))
def test_gamma0_index_cross_check(N):
    F = construct_symbol(Gamma0(N))
    assert invariants(F).index == index_by_bfs(Gamma0(N))[0] == gamma0_index(N)


@pytest.mark.parametrize("spec", FAST_CORPUS, ids=str)
def test_index_formulas_on_corpus(spec):
    _hurwitz_holds(construct_symbol(spec))


@pytest.mark.slow
@pytest.mark.parametrize("spec", SLOW_CORPUS, ids=str)
def test_index_formulas_on_large_corpus(spec):
    _hurwitz_holds(construct_symbol(spec))


@pytest.mark.parametrize("spec", [Gamma0(6), Gamma1(5), GammaFull(3)], ids=str)
def test_insertion_policies_agree_on_invariants(spec):
    left = invariants(construct_symbol(spec, insertion="leftmost"))
    right = invariants(construct_symbol(spec, insertion="rightmost"))
    assert left.model_dump(exclude={"cusp_classes"}) == right.model_dump(exclude={"cusp_classes"})
    assert left.cusp_widths() == right.cusp_widths()


def test_known_genus():
    assert invariants(construct_symbol(Gamma0(11))).genus == 1
    assert invariants(construct_symbol(GammaFull(6))).genus == 1
    assert invariants(construct_symbol(Gamma1(5))).cusps == 4


def test_random_permutation_groups(rng):
    for _ in range(50):
        pair = random_pair(rng, rng.randint(1, 24))
        F = construct_symbol(PermGroup(pair))
        _hurwitz_holds(F)
        inv = invariants(F)
        perm = perm_invariants(pair)
        assert inv.index == pair.mu
        assert (inv.e2, inv.e3, inv.level) == (perm.e2, perm.e3, perm.level)
        assert inv.cusp_widths() == perm.cusp_widths


def test_symbol_group_reconstructs_itself(gamma2_symbol):
    F = construct_symbol(SymbolGroup(gamma2_symbol))
    assert invariants(F).model_dump(exclude={"cusp_classes"}) == invariants(gamma2_symbol).model_dump(exclude={"cusp_classes"})


def test_edge_cap():
    with pytest.raises(CapExceededError):
        construct_symbol(Gamma0(13), max_edges=4)
    with pytest.raises(CapExceededError):
        construct_symbol(GammaFull(4), max_edges=3)


@pytest.mark.parametrize("kwargs", [{"max_edges": 2}, {"insertion": "middle"}])
def test_bad_parameters(kwargs):
    with pytest.raises(ParameterError):
        construct_symbol(Gamma0(3), **kwargs)


def _insertions(F):
    # 种子序列有 3 条边，每次插入中间分数增加一条
    return max(F.edge_count - 3, 0)


@pytest.mark.parametrize("spec", FAST_CORPUS, ids=str)
def test_mediant_insertions_bounded_by_index(spec):
    for insertion in ("leftmost", "rightmost"):
        F = construct_symbol(spec, insertion=insertion)
        assert _insertions(F) <= 2 * index_by_bfs(spec)[0]


def test_mediant_insertions_on_random_permutation_groups(rng):
    for _ in range(20):
        pair = random_pair(rng, rng.randint(2, 20))
        assert _insertions(construct_symbol(PermGroup(pair))) <= 2 * pair.mu


def test_construction_cache_is_bounded():
    assert _construct.cache_info().maxsize == 128
    F = construct_symbol(Gamma0(13))
    assert construct_symbol(Gamma0(13)) is F
    with pytest.raises(CapExceededError):
        construct_symbol(Gamma0(13), max_edges=4)
