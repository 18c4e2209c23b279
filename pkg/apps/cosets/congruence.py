"""
同余子群判定

两种互相独立的方法：
- 置换关系：N = l 的阶，按 N 为奇数、2 的幂或两者乘积检验 l、r 满足的关系；
- 包含 Γ(N)：构造 Γ(N) 的 Farey 符号，逐个检验其生成元是否属于该群。
"""
from typing import List, Tuple, Union

from sympy import mod_inverse
from sympy.combinatorics import Permutation
from sympy.ntheory.modular import crt

from core.config import settings
from core.exceptions import InconclusiveError
from core.logger import debug

from apps.farey import FareySymbol, generators, invariants
from apps.groups import GammaFull, GroupSpec
from apps.construction import construct_symbol
from apps.membership import contains
from apps.permutations import PermutationPair, compose

Factor = Tuple[Permutation, int]


def _word(*factors: Factor) -> Permutation:
    """φ(w₁w₂⋯) = φ(w₁)∘φ(w₂)∘⋯"""
    result = factors[0][0] ** factors[0][1]
    for p, k in factors[1:]:
        result = compose(result, p ** k)
    return result


def _odd_relations(l: Permutation, r: Permutation, N: int) -> List[Permutation]:
    h = int(mod_inverse(2, N))
    return [_word((_word((r, 2), (l, -h)), 3))]


def _two_power_relations(l: Permutation, r: Permutation, N: int) -> List[Permutation]:
    f = int(mod_inverse(5, N))
    s = _word((l, 20), (r, f), (l, -4), (r, -1))
    lrl = _word((l, 1), (r, -1), (l, 1))
    return [
        _word((lrl, -1), (s, 1), (lrl, 1), (s, 1)),
        _word((s, -1), (r, 1), (s, 1), (r, -25)),
        _word((_word((s, 1), (r, 5), (lrl, 1)), 3)),
    ]


def _mixed_relations(l: Permutation, r: Permutation, e: int, m: int) -> List[Permutation]:
    c, _ = crt([e, m], [0, 1])
    d, _ = crt([e, m], [1, 0])
    c, d = int(c), int(d)
    h = int(mod_inverse(2, m))
    f = int(mod_inverse(5, e))

    a, b = l ** c, r ** c
    l2, r2 = l ** d, r ** d
    s = _word((l2, 20), (r2, f), (l2, -4), (r2, -1))
    aba = _word((a, 1), (b, -1), (a, 1))
    lrl = _word((l2, 1), (r2, -1), (l2, 1))
    return [
        _word((a, -1), (r2, -1), (a, 1), (r2, 1)),
        aba ** 4,
        _word((aba, 2), (_word((a, -1), (b, 1)), 3)),
        _word((aba, 2), (_word((b, 2), (a, -h)), -3)),
        _word((lrl, -1), (s, 1), (lrl, 1), (s, 1)),
        _word((s, -1), (r2, 1), (s, 1), (r2, -25)),
        _word((lrl, 2), (_word((s, 1), (r2, 5), (lrl, 1)), -3)),
    ]


def congruence_hsu(pair: PermutationPair) -> bool:
    """按 l 的阶 N 选择关系组，全部为恒等置换时是同余子群"""
    l, r = pair.l, pair.r
    N = int(l.order())
    if N == 1:
        return True
    e = N & -N
    m = N // e
    if e == 1:
        relations = _odd_relations(l, r, N)
    elif m == 1:
        relations = _two_power_relations(l, r, N)
    else:
        relations = _mixed_relations(l, r, e, m)
    failed = [i for i, rel in enumerate(relations) if not rel.is_Identity]
    debug(f"置换关系检验: N = {N}，共 {len(relations)} 条关系，不成立的关系 {failed}")
    return not failed


def congruence_wohlfahrt(target: Union[FareySymbol, GroupSpec]) -> bool:
    """
    级为 N 的群是同余子群当且仅当包含 Γ(N)

    Raises:
        InconclusiveError: 级超过 WOHLFAHRT_MAX_LEVEL
    """
    F = target if isinstance(target, FareySymbol) else construct_symbol(target)
    N = invariants(F).level
    if N > settings.WOHLFAHRT_MAX_LEVEL:
        raise InconclusiveError(
            f"无法得出结论: 级 {N} 超过上限 {settings.WOHLFAHRT_MAX_LEVEL}",
            data={"level": N, "max_level": settings.WOHLFAHRT_MAX_LEVEL},
        )
    principal = construct_symbol(GammaFull(N))
    for index, g in enumerate(generators(principal)):
        if not contains(F, g).verdict:
            debug(f"Γ({N}) 的第 {index + 1} 个生成元 {g} 不在群中")
            return False
    return True
