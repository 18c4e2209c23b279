"""
由成员判定谓词构造 Farey 符号

从种子序列出发，每一轮对所有未配对的边依次尝试自身偶配对、自身奇配对、
与右侧未配对边的自由配对；仍有未配对边时在其中一条边上插入中间分数。
配对变换只依赖端点，所以判定结果按端点缓存。
"""
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from core.config import settings
from core.exceptions import CapExceededError, InternalError, ParameterError
from core.logger import debug, info

from apps.psl2 import E, INFINITY, L, NEG_INFINITY, ZERO, ExtFraction, ProjectiveMatrix, mediant
from apps.farey import (
    EVEN, ODD, FareySymbol, Pairing,
    even_pairing, free_pairing, invariants, odd_pairing
)
from apps.groups import GroupSpec, is_member

INSERTION_POLICIES = ("leftmost", "rightmost")

# 两个基本情形与种子选择用到的矩阵
_ORDER3_AT_ZERO = ProjectiveMatrix.of(0, 1, -1, -1)
_ORDER3_AT_ONE = ProjectiveMatrix.of(-1, 1, -1, 0)

PSL2_SYMBOL = FareySymbol((ZERO,), (EVEN, ODD))
GAMMA_SQUARED_SYMBOL = FareySymbol((ZERO,), (ODD, ODD))


class _Builder:
    def __init__(self, spec: GroupSpec, max_edges: int):
        self.spec = spec
        self.max_edges = max_edges
        self.memo: Dict[Tuple, bool] = {}
        self.next_label = 1
        self.calls = 0

    def member(self, key: Tuple, make: Callable[[], ProjectiveMatrix]) -> bool:
        if key not in self.memo:
            self.calls += 1
            self.memo[key] = is_member(self.spec, make())
        return self.memo[key]

    def pair_round(self, seq: List[ExtFraction], pairings: List[Optional[Pairing]]) -> None:
        for i in range(len(pairings)):
            if pairings[i] is not None:
                continue
            left, right = seq[i], seq[i + 1]
            if self.member(("e", left, right), lambda: even_pairing(left, right)):
                self.assign(pairings, i, EVEN)
                continue
            if self.member(("o", left, right), lambda: odd_pairing(left, right)):
                self.assign(pairings, i, ODD)
                continue
            for j in range(i + 1, len(pairings)):
                if pairings[j] is not None:
                    continue
                k_left, k_right = seq[j], seq[j + 1]
                key = ("f", left, right, k_left, k_right)
                if self.member(key, lambda: free_pairing(left, right, k_left, k_right)):
                    label = Pairing.free(self.next_label)
                    self.next_label += 1
                    self.assign(pairings, i, label)
                    self.assign(pairings, j, label)
                    break

    @staticmethod
    def assign(pairings: List[Optional[Pairing]], i: int, pairing: Pairing) -> None:
        if pairings[i] is not None:
            raise InternalError(f"第 {i} 条边被重复配对，成员判定谓词前后不一致", data={"edge": i})
        pairings[i] = pairing


def _base_symbol(spec: GroupSpec) -> Optional[FareySymbol]:
    if is_member(spec, L) and is_member(spec, E):
        return PSL2_SYMBOL
    if is_member(spec, _ORDER3_AT_ZERO) and is_member(spec, _ORDER3_AT_ONE):
        return GAMMA_SQUARED_SYMBOL
    return None


def _seed(spec: GroupSpec) -> List[ExtFraction]:
    # 两个种子中至少有一个的所有有限顶点都不是椭圆点
    if not is_member(spec, _ORDER3_AT_ONE):
        return [NEG_INFINITY, ZERO, ExtFraction(1, 1), INFINITY]
    return [NEG_INFINITY, ExtFraction(-1, 1), ZERO, INFINITY]


def construct_symbol(
    spec: GroupSpec, max_edges: Optional[int] = None, insertion: Optional[str] = None
) -> FareySymbol:
    """
    为 spec 描述的有限指数子群构造 Farey 符号

    Args:
        spec: 群描述，只通过 is_member 使用
        max_edges: 边数上限，默认取配置 MAX_EDGES
        insertion: 插入中间分数的位置，leftmost 或 rightmost，默认取配置

    Raises:
        ParameterError: 参数无效
        CapExceededError: 边数超过上限
        InternalError: 成员判定谓词不一致或结果退化
    """
    max_edges = max_edges if max_edges is not None else settings.MAX_EDGES
    insertion = (insertion or settings.MEDIANT_INSERTION).lower()
    if max_edges < 3:
        raise ParameterError(f"边数上限至少为 3: {max_edges}")
    if insertion not in INSERTION_POLICIES:
        raise ParameterError(f"插入策略只能是 {' / '.join(INSERTION_POLICIES)}: {insertion}")

    return _construct(spec, insertion, max_edges)


# 结果按 (spec, insertion, max_edges) 缓存；超限时抛出的异常不会被缓存
@lru_cache(maxsize=128)
def _construct(spec: GroupSpec, insertion: str, max_edges: int) -> FareySymbol:
    base = _base_symbol(spec)
    if base is not None:
        return base

    builder = _Builder(spec, max_edges)
    seq = _seed(spec)
    pairings: List[Optional[Pairing]] = [None] * (len(seq) - 1)
    rounds = 0
    while True:
        rounds += 1
        builder.pair_round(seq, pairings)
        unpaired = [i for i, p in enumerate(pairings) if p is None]
        debug(f"第 {rounds} 轮: {len(pairings)} 条边，{len(unpaired)} 条未配对")
        if not unpaired:
            break
        if len(pairings) + 1 > max_edges:
            raise CapExceededError(
                f"边数超过上限 {max_edges}，群的指数过大或不是有限指数子群",
                data={"max_edges": max_edges},
            )
        i = unpaired[0] if insertion == "leftmost" else unpaired[-1]
        seq.insert(i + 1, mediant(seq[i], seq[i + 1]))
        pairings.insert(i + 1, None)

    F = FareySymbol(tuple(seq[1:-1]), tuple(pairings))
    invariants(F)
    info(f"{spec} 的 Farey 符号: {len(pairings)} 条边，{builder.calls} 次成员判定")
    return F
