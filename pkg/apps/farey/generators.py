"""
边配对变换与独立生成元

偶边、奇边、自由边各有一个显式公式；无穷端点取形式值 −1/0 与 1/0。
生成元按边序排列，自由边对只取序号较小的那条边（源边）的变换。
"""
from functools import lru_cache
from typing import Dict, List, Tuple

from apps.psl2 import ExtFraction, ProjectiveMatrix

from .symbol import FareySymbol, PairingKind


def even_pairing(left: ExtFraction, right: ExtFraction) -> ProjectiveMatrix:
    """交换边 (left, right) 两端点的 2 阶元"""
    a, b, a1, b1 = left.p, left.q, right.p, right.q
    return ProjectiveMatrix.of(a1 * b1 + a * b, -a * a - a1 * a1, b * b + b1 * b1, -a1 * b1 - a * b)


def odd_pairing(left: ExtFraction, right: ExtFraction) -> ProjectiveMatrix:
    """3 阶元：right ↦ left ↦ 中间分数 ↦ right"""
    a, b, a1, b1 = left.p, left.q, right.p, right.q
    return ProjectiveMatrix.of(
        a1 * b1 + a * b1 + a * b,
        -a * a - a * a1 - a1 * a1,
        b * b + b * b1 + b1 * b1,
        -a1 * b1 - a1 * b - a * b,
    )


def free_pairing(
    left: ExtFraction, right: ExtFraction, k_left: ExtFraction, k_right: ExtFraction
) -> ProjectiveMatrix:
    """把边 (left, right) 映到边 (k_left, k_right)：left ↦ k_right，right ↦ k_left"""
    return ProjectiveMatrix.of(
        k_right.p * right.q + k_left.p * left.q,
        -k_left.p * left.p - k_right.p * right.p,
        k_left.q * left.q + k_right.q * right.q,
        -right.p * k_right.q - left.p * k_left.q,
    )


def generator_for_edge(F: FareySymbol, i: int) -> ProjectiveMatrix:
    """
    第 i 条边的边配对变换

    自由边对的两条边给出互逆的两个矩阵。

    Raises:
        ParameterError: 边序号越界
    """
    left, right = F.edge(i)
    kind = F.pairings[i].kind
    if kind is PairingKind.EVEN:
        return even_pairing(left, right)
    if kind is PairingKind.ODD:
        return odd_pairing(left, right)
    return free_pairing(left, right, *F.edge(F.partner(i)))


@lru_cache(maxsize=256)
def _generator_table(F: FareySymbol) -> Tuple[Tuple[ProjectiveMatrix, ...], Dict[int, Tuple[int, int]]]:
    matrices: List[ProjectiveMatrix] = []
    letters: Dict[int, Tuple[int, int]] = {}
    for i in range(F.edge_count):
        k = F.partner(i)
        if F.pairings[i].is_free and k < i:
            index, _ = letters[k]
            letters[i] = (index, -1)
            continue
        letters[i] = (len(matrices), 1)
        matrices.append(generator_for_edge(F, i))
    return tuple(matrices), letters


def generators(F: FareySymbol) -> List[ProjectiveMatrix]:
    """独立生成元，个数为 r + e₂ + e₃"""
    return list(_generator_table(F)[0])


def edge_letter(F: FareySymbol, i: int) -> Tuple[int, int]:
    """
    第 i 条边的配对变换在生成元列表中的位置

    Returns:
        (生成元序号, ±1)，generators(F)[idx] ** sign 即 generator_for_edge(F, i)
    """
    F.check_edge(i)
    return _generator_table(F)[1][i]
