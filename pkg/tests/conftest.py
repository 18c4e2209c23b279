import random
from math import prod
from typing import Callable, List

import pytest
from sympy import primefactors
from sympy.combinatorics import Permutation

from core.exceptions import ParameterError
from apps.psl2 import ProjectiveMatrix, evaluate_lr_word
from apps.farey import FareySymbol, parse_symbol
from apps.construction import GAMMA_SQUARED_SYMBOL, PSL2_SYMBOL
from apps.permutations import PermutationPair, parse_cycles

GAMMA2_TEXT = "[-oo 0 1 2 oo | 1 2 2 1]"


def gamma0_index(N: int) -> int:
    """N·∏(1 + 1/p)"""
    return round(N * prod(1 + 1 / p for p in primefactors(N)))


def random_lr_word_matrix(rng: random.Random, max_length: int = 30) -> ProjectiveMatrix:
    """长度不超过 max_length 的随机 L/R 字的乘积"""
    length = rng.randint(0, max_length)
    word = [(rng.choice("LR"), rng.choice((-3, -2, -1, 1, 2, 3))) for _ in range(length)]
    return evaluate_lr_word(word)


def random_pair(rng: random.Random, mu: int) -> PermutationPair:
    """μ 个点上随机的可迁置换对 (e, v)"""
    while True:
        points = list(range(mu))
        rng.shuffle(points)
        involutions: List[List[int]] = []
        while len(points) >= 2 and rng.random() < 0.8:
            involutions.append([points.pop(), points.pop()])
        points = list(range(mu))
        rng.shuffle(points)
        triples: List[List[int]] = []
        while len(points) >= 3 and rng.random() < 0.8:
            triples.append([points.pop(), points.pop(), points.pop()])
        e = Permutation(involutions, size=mu) if involutions else Permutation([], size=mu)
        v = Permutation(triples, size=mu) if triples else Permutation([], size=mu)
        try:
            return PermutationPair(e, v)
        except ParameterError:
            continue


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240517)


@pytest.fixture
def random_matrix(rng) -> Callable[[], ProjectiveMatrix]:
    return lambda: random_lr_word_matrix(rng)


@pytest.fixture
def psl2_symbol() -> FareySymbol:
    return PSL2_SYMBOL


@pytest.fixture
def gamma_squared_symbol() -> FareySymbol:
    return GAMMA_SQUARED_SYMBOL


@pytest.fixture
def gamma2_symbol() -> FareySymbol:
    return parse_symbol(GAMMA2_TEXT)


@pytest.fixture
def index7_pair() -> PermutationPair:
    """指数 7、级 6 的非同余子群"""
    return PermutationPair(parse_cycles("(1 2)(3 4)(5 6)", 7), parse_cycles("(2 3 7)(4 5 6)", 7))
