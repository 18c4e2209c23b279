"""
Farey 符号群的成员判定

跟踪偶测地线 M(H_{0,∞})，端点 M(0)、M(∞)。只要两个端点不全是多边形顶点，
这条线就落在某条边 i 下方，用该边的配对变换（奇边按中间分数分左右半边）
把它推回多边形；每一步都让 M 左乘一个 Γ 中的元素 α。
结束时 A = α₀⁻¹ α₁⁻¹ … α_k⁻¹ · M，于是 A ∈ Γ 当且仅当 M ∈ Γ，
而 M 只有三种可能落在 Γ 中：单位元、(0,∞) 偶边上的 E、(0,∞) 自由边的配对变换。
"""
from bisect import bisect_right
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from core.config import settings
from core.exceptions import CapExceededError, InternalError, ParameterError
from core.logger import debug

from apps.psl2 import E, IDENTITY, INFINITY, ZERO, ExtFraction, ProjectiveMatrix, mediant
from apps.farey import FareySymbol, PairingKind, edge_letter, generator_for_edge, generators

Letter = Tuple[int, int]


class Terminal(str, Enum):
    IDENTITY = "IDENTITY"
    FREE_PAIRED_WITH_ZERO_INFINITY = "FREE_PAIRED_WITH_ZERO_INFINITY"
    EVEN_ZERO_INFINITY = "EVEN_ZERO_INFINITY"
    NOT_MEMBER = "NOT_MEMBER"


class MembershipCertificate(BaseModel):
    verdict: bool = Field(..., description="是否属于该群")
    word: List[Tuple[int, int]] = Field(default_factory=list, description="(生成元序号, ±1)，乘积等于查询矩阵")
    terminal: Terminal = Field(..., description="终止情形")
    steps: int = Field(0, description="迭代次数")


class _Sides:
    """一个符号上迭代所需的预计算数据"""

    def __init__(self, F: FareySymbol):
        self.symbol = F
        self.sequence: Tuple[ExtFraction, ...] = F.sequence
        self.vertices: FrozenSet[ExtFraction] = frozenset(x.cusp() for x in self.sequence)
        self.x0, self.xn = F.vertices[0], F.vertices[-1]
        self.moves: List[Tuple[ProjectiveMatrix, Letter]] = []
        self.odd_inverse: Dict[int, Tuple[ProjectiveMatrix, Letter]] = {}
        self.mediants: Dict[int, ExtFraction] = {}
        for i, pairing in enumerate(F.pairings):
            G = generator_for_edge(F, i)
            index, sign = edge_letter(F, i)
            self.moves.append((G, (index, sign)))
            if pairing.kind is PairingKind.ODD:
                self.odd_inverse[i] = (G.inverse(), (index, -sign))
                self.mediants[i] = mediant(*F.edge(i))

        # 端点为 0 和 ∞ 的边：x₀ = 0 时是第 0 条边，xₙ = 0 时是最后一条边
        self.zero_sides: List[int] = []
        if self.x0 == ZERO:
            self.zero_sides.append(0)
        if self.xn == ZERO:
            self.zero_sides.append(F.edge_count - 1)

    def is_vertex(self, x: ExtFraction) -> bool:
        return x.cusp() in self.vertices

    def side_of(self, u: ExtFraction, v: ExtFraction) -> Optional[int]:
        """端点集合为 {u, v} 的边，没有则为 None"""
        ends = {u.cusp(), v.cusp()}
        for i in range(self.symbol.edge_count):
            left, right = self.symbol.edge(i)
            if {left.cusp(), right.cusp()} == ends:
                return i
        return None


@lru_cache(maxsize=256)
def _sides(F: FareySymbol) -> _Sides:
    return _Sides(F)


def _gap(sides: _Sides, u: ExtFraction, v: ExtFraction) -> Optional[Tuple[int, ExtFraction]]:
    """
    两个端点都是顶点时返回 None，否则返回 (边序号, 较大端点)

    Raises:
        InternalError: 偶测地线与多边形相交却不落在某条边下方
    """
    if u.is_infinite or v.is_infinite:
        w = v if u.is_infinite else u
        if sides.is_vertex(w):
            return None
        if w < sides.x0:
            return 0, w
        if w > sides.xn:
            return sides.symbol.edge_count - 1, INFINITY
        raise InternalError(f"竖直线 Re = {w} 穿过多边形内部")

    if sides.is_vertex(u) and sides.is_vertex(v):
        return None
    lo, hi = (u, v) if u < v else (v, u)
    i = bisect_right(sides.sequence, lo) - 1
    if not hi <= sides.sequence[i + 1]:
        raise InternalError(f"偶测地线 ({lo}, {hi}) 跨过了顶点 {sides.sequence[i + 1]}")
    return i, hi


def reduce_to_polygon(F: FareySymbol, A: ProjectiveMatrix) -> Tuple[ProjectiveMatrix, List[Letter]]:
    """
    把 A(H_{0,∞}) 推回多边形

    Returns:
        (终止矩阵 M, α 序列的字母)，满足 α_k ⋯ α₀ · A = M

    Raises:
        CapExceededError: 迭代次数超过 LLT_MAX_STEPS
    """
    sides = _sides(F)
    M = A
    alphas: List[Letter] = []
    cap = settings.LLT_MAX_STEPS
    while True:
        gap = _gap(sides, M.act(ZERO), M.act(INFINITY))
        if gap is None:
            return M, alphas
        if len(alphas) >= cap:
            raise CapExceededError(f"成员判定超过 {cap} 步仍未终止", data={"steps": len(alphas)})

        i, hi = gap
        if i in sides.odd_inverse and hi <= sides.mediants[i]:
            alpha, letter = sides.odd_inverse[i]
        else:
            alpha, letter = sides.moves[i]
        M = alpha * M
        alphas.append(letter)


def _classify(sides: _Sides, M: ProjectiveMatrix) -> Tuple[Terminal, Optional[Letter]]:
    if M == IDENTITY:
        return Terminal.IDENTITY, None
    for s in sides.zero_sides:
        kind = sides.symbol.pairings[s].kind
        G, letter = sides.moves[s]
        if kind is PairingKind.EVEN and M == E:
            return Terminal.EVEN_ZERO_INFINITY, letter
        if kind is PairingKind.FREE and M == G:
            return Terminal.FREE_PAIRED_WITH_ZERO_INFINITY, letter
    return Terminal.NOT_MEMBER, None


def contains(F: FareySymbol, A: ProjectiveMatrix) -> MembershipCertificate:
    """
    判定 A 是否属于 F 对应的群，属于时给出生成元字

    字中第 j 个字母是 α_j⁻¹；终止矩阵为生成元时把它接在末尾，
    因此 word_to_matrix(F, word) == A。
    """
    M, alphas = reduce_to_polygon(F, A)
    terminal, last = _classify(_sides(F), M)
    steps = len(alphas)
    if terminal is Terminal.NOT_MEMBER:
        debug(f"{A} 不在群中，{steps} 步后终止于 {M}")
        return MembershipCertificate(verdict=False, word=[], terminal=terminal, steps=steps)

    word = [(index, -sign) for index, sign in alphas]
    if last is not None:
        word.append(last)
    return MembershipCertificate(verdict=True, word=word, terminal=terminal, steps=steps)


def is_member(F: FareySymbol, A: ProjectiveMatrix) -> bool:
    return contains(F, A).verdict


def word_to_matrix(F: FareySymbol, word: Iterable[Letter]) -> ProjectiveMatrix:
    """
    生成元字的乘积

    Raises:
        ParameterError: 生成元序号越界
    """
    gens = generators(F)
    result = IDENTITY
    for index, exponent in word:
        if not 0 <= index < len(gens):
            raise ParameterError(f"生成元序号越界: {index}（共 {len(gens)} 个生成元）")
        result = result * gens[index] ** exponent
    return result


def coset_key(F: FareySymbol, A: ProjectiveMatrix) -> Tuple[int, int, int, int]:
    """
    左陪集 AΓ 的规范标签

    把 A⁻¹ 推回多边形得到 M ∈ ΓA⁻¹。多边形内端点都是顶点的偶测地线，
    只有边才会被 Γ 中的非单位元映到另一条这样的线：
    偶边取 M 与 G·M 中较小的一个，自由边统一换到源边。
    """
    sides = _sides(F)
    M, _ = reduce_to_polygon(F, A.inverse())
    s = sides.side_of(M.act(ZERO), M.act(INFINITY))
    if s is not None:
        G, (_, sign) = sides.moves[s]
        kind = F.pairings[s].kind
        if kind is PairingKind.EVEN:
            M = min(M, G * M, key=lambda X: X.entries)
        elif kind is PairingKind.FREE and sign < 0:
            M = G * M
    return M.entries


def format_word(word: Sequence[Letter]) -> str:
    """生成元从 1 开始编号，例如 "g3^-1 g1 g1"；空字为 "1" """
    if not word:
        return "1"
    return " ".join(f"g{index + 1}" if k == 1 else f"g{index + 1}^{k}" for index, k in word)
