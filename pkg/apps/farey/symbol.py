"""
Farey 符号

顶点 x₀ < … < xₙ 两端补上 −1/0 与 1/0 得到完整序列 seq，
第 i 条边是 (seq[i], seq[i+1])，共 n+2 条，每条边带一个配对标记。
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, List, Tuple

from core.exceptions import ParameterError, SymbolError
from apps.psl2 import INFINITY, NEG_INFINITY, ZERO, ExtFraction, det_pairing


class PairingKind(str, Enum):
    EVEN = "even"
    ODD = "odd"
    FREE = "free"


@dataclass(frozen=True, slots=True)
class Pairing:
    kind: PairingKind
    label: int = 0

    @classmethod
    def free(cls, label: int) -> "Pairing":
        if label <= 0:
            raise SymbolError(f"自由配对标签必须为正整数: {label}")
        return cls(PairingKind.FREE, label)

    @property
    def is_free(self) -> bool:
        return self.kind is PairingKind.FREE

    def __str__(self) -> str:
        if self.kind is PairingKind.EVEN:
            return "e"
        if self.kind is PairingKind.ODD:
            return "o"
        return str(self.label)


EVEN = Pairing(PairingKind.EVEN)
ODD = Pairing(PairingKind.ODD)


@dataclass(frozen=True)
class FareySymbol:
    """
    广义 Farey 序列加上每条边的配对

    构造时做结构校验（邻接行列式、顶点 0、自由标签恰好出现两次、配对数量），
    出错时 SymbolError 带出边序号。
    """
    vertices: Tuple[ExtFraction, ...]
    pairings: Tuple[Pairing, ...]
    _partners: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "pairings", tuple(self.pairings))
        self._validate()

    def _validate(self) -> None:
        if not self.vertices:
            raise SymbolError("Farey 符号至少要有一个有限顶点")
        for i, x in enumerate(self.vertices):
            if x.is_infinite:
                raise SymbolError(f"顶点 x{i} 不能是无穷", edge=i + 1)
        seq = self.sequence
        for i in range(len(seq) - 1):
            if det_pairing(seq[i], seq[i + 1]) != 1:
                raise SymbolError(
                    f"第 {i} 条边 ({seq[i]}, {seq[i + 1]}) 不满足 Farey 邻接条件", edge=i
                )
        if ZERO not in self.vertices:
            raise SymbolError("Farey 符号的顶点中必须含有 0")
        if len(self.pairings) != self.edge_count:
            raise SymbolError(
                f"配对数量 {len(self.pairings)} 与边数 {self.edge_count} 不一致"
            )

        positions: Dict[int, List[int]] = {}
        for i, pairing in enumerate(self.pairings):
            if pairing.is_free:
                if pairing.label <= 0:
                    raise SymbolError(f"第 {i} 条边的自由标签必须为正整数", edge=i)
                positions.setdefault(pairing.label, []).append(i)
        partners: Dict[int, int] = {}
        for label, edges in positions.items():
            if len(edges) != 2:
                bad = edges[0] if len(edges) == 1 else edges[2]
                raise SymbolError(f"自由标签 {label} 出现了 {len(edges)} 次，应恰好两次", edge=bad)
            i, j = edges
            partners[i], partners[j] = j, i
        object.__setattr__(self, "_partners", partners)

    @property
    def n(self) -> int:
        return len(self.vertices) - 1

    @property
    def edge_count(self) -> int:
        return len(self.vertices) + 1

    @cached_property
    def sequence(self) -> Tuple[ExtFraction, ...]:
        """完整序列 −1/0, x₀, …, xₙ, 1/0"""
        return (NEG_INFINITY, *self.vertices, INFINITY)

    def edge(self, i: int) -> Tuple[ExtFraction, ExtFraction]:
        self.check_edge(i)
        seq = self.sequence
        return seq[i], seq[i + 1]

    def check_edge(self, i: int) -> None:
        if not isinstance(i, int) or not 0 <= i < self.edge_count:
            raise ParameterError(f"边序号越界: {i}（共 {self.edge_count} 条边）")

    def partner(self, i: int) -> int:
        """自由边的配对边序号；偶边、奇边与自身配对"""
        self.check_edge(i)
        return self._partners.get(i, i)

    def count(self, kind: PairingKind) -> int:
        return sum(1 for p in self.pairings if p.kind is kind)

    @property
    def e2(self) -> int:
        return self.count(PairingKind.EVEN)

    @property
    def e3(self) -> int:
        return self.count(PairingKind.ODD)

    @property
    def r(self) -> int:
        return self.count(PairingKind.FREE) // 2

    def free_pairs(self) -> List[Tuple[int, int]]:
        """按源边排序的自由边对 (i, j)，i < j"""
        return sorted((i, j) for i, j in self._partners.items() if i < j)

    def __str__(self) -> str:
        return format_symbol(self)


def format_symbol(F: FareySymbol) -> str:
    fractions = " ".join(str(x) for x in F.sequence)
    pairings = " ".join(str(p) for p in F.pairings)
    return f"[{fractions} | {pairings}]"
