import pytest

from core.exceptions import InconclusiveError
from apps.farey import invariants
from apps.groups import Gamma0, Gamma1, GammaFull, PermGroup
from apps.construction import construct_symbol
from apps.permutations import perm_invariants
from apps.cosets import congruence_hsu, congruence_wohlfahrt, perm_rep

from .conftest import random_pair

FAST_CORPUS = [Gamma0(2), Gamma0(3), Gamma0(4), Gamma0(5), Gamma0(6), Gamma0(8), Gamma1(4), Gamma1(5), GammaFull(2), GammaFull(3), GammaFull(4)]
SLOW_CORPUS = (
    [Gamma0(N) for N in range(7, 13)]
    + [Gamma1(N) for N in range(6, 13)]
    + [GammaFull(N) for N in range(5, 13)]
)


def _hsu(spec):
    return congruence_hsu(perm_rep(construct_symbol(spec)).pair)


@pytest.mark.parametrize("spec", FAST_CORPUS, ids=str)
def test_congruence_families_pass_hsu(spec):
    assert _hsu(spec)


@pytest.mark.slow
@pytest.mark.parametrize("spec", SLOW_CORPUS, ids=str)
def test_congruence_families_pass_hsu_up_to_level_12(spec):
    assert _hsu(spec)


def test_trivial_group(psl2_symbol):
    assert congruence_hsu(perm_rep(psl2_symbol).pair)
    assert congruence_wohlfahrt(psl2_symbol)


def test_gamma_squared_is_congruence(gamma_squared_symbol):
    assert congruence_hsu(perm_rep(gamma_squared_symbol).pair)
    assert congruence_wohlfahrt(gamma_squared_symbol)


def test_index7_group_is_not_congruence(index7_pair):
    assert not congruence_hsu(index7_pair)
    F = construct_symbol(PermGroup(index7_pair))
    assert invariants(F).level == 6
    assert not congruence_wohlfahrt(F)
    assert not congruence_hsu(perm_rep(F).pair)


def test_wohlfahrt_positive_controls(gamma2_symbol):
    assert congruence_wohlfahrt(gamma2_symbol)
    assert congruence_wohlfahrt(Gamma0(4))
    assert congruence_wohlfahrt(GammaFull(3))


def test_wohlfahrt_is_inconclusive_for_large_level():
    with pytest.raises(InconclusiveError) as info:
        congruence_wohlfahrt(Gamma0(11))
    assert info.value.data["level"] == 11


def test_tests_agree_on_random_groups(rng):
    checked = 0
    while checked < 15:
        pair = random_pair(rng, rng.randint(2, 12))
        if perm_invariants(pair).level > 6:
            continue
        F = construct_symbol(PermGroup(pair))
        assert congruence_hsu(pair) == congruence_wohlfahrt(F), str(F)
        checked += 1


@pytest.mark.slow
def test_tests_agree_on_many_random_groups(rng):
    checked = 0
    while checked < 50:
        pair = random_pair(rng, rng.randint(2, 24))
        if perm_invariants(pair).level > 8:
            continue
        F = construct_symbol(PermGroup(pair))
        assert congruence_hsu(pair) == congruence_wohlfahrt(F), str(F)
        checked += 1
