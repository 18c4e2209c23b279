"""
陪集置换表示

e、v 是 E、V 在左陪集 {α₁Γ, …, α_μΓ} 上的左乘作用，l = e∘v⁻¹，r = e∘v⁻²。
复合约定 (σ∘τ)(i) = σ(τ(i))，从而 φ(γδ) = φ(γ)∘φ(δ)。
sympy 的乘法 p*q 先作用 p，所以 σ∘τ 写成 τ*σ。

内部点从 0 开始编号，文本与 JSON 中从 1 开始。
"""
import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field
from sympy.combinatorics import Permutation, PermutationGroup

from core.exceptions import ParameterError
from apps.psl2 import ProjectiveMatrix, lr_word

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_POINT_RE = re.compile(r"[0-9]+")


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """(σ∘τ)(i) = σ(τ(i))"""
    return tau * sigma


def identity(mu: int) -> Permutation:
    return Permutation([], size=mu)


@dataclass(frozen=True)
class PermutationPair:
    """e² = v³ = 1 且 ⟨e, v⟩ 在 μ 个点上可迁"""
    e: Permutation
    v: Permutation

    def __post_init__(self):
        if self.e.size != self.v.size:
            raise ParameterError(f"e 与 v 作用的点数不同: {self.e.size} ≠ {self.v.size}")
        if not (self.e ** 2).is_Identity:
            raise ParameterError("e 的平方不是恒等置换")
        if not (self.v ** 3).is_Identity:
            raise ParameterError("v 的立方不是恒等置换")
        if self.mu > 1 and not PermutationGroup([self.e, self.v]).is_transitive():
            raise ParameterError("⟨e, v⟩ 不可迁")

    @classmethod
    def from_ev(cls, e: Permutation, v: Permutation) -> "PermutationPair":
        return cls(e, v)

    @classmethod
    def from_lr(cls, l: Permutation, r: Permutation) -> "PermutationPair":
        """由 v = r⁻¹∘l、e = l∘v 反解"""
        if l.size != r.size:
            raise ParameterError(f"l 与 r 作用的点数不同: {l.size} ≠ {r.size}")
        v = compose(r ** -1, l)
        return cls(compose(l, v), v)

    @property
    def mu(self) -> int:
        return self.e.size

    @property
    def l(self) -> Permutation:
        return compose(self.e, self.v ** -1)

    @property
    def r(self) -> Permutation:
        return compose(self.e, self.v ** -2)

    def image_of(self, A: ProjectiveMatrix) -> Permutation:
        """φ(A)，由 A 的 L/R 字逐字母复合得到"""
        result = identity(self.mu)
        l, r = self.l, self.r
        for letter, k in lr_word(A):
            result = compose(result, (l if letter == "L" else r) ** k)
        return result

    def apply(self, A: ProjectiveMatrix, point: int = 0) -> int:
        """φ(A)(point)，从字的最后一个字母开始作用"""
        l, r = self.l, self.r
        for letter, k in reversed(lr_word(A).terms):
            point = ((l if letter == "L" else r) ** k)(point)
        return point

    def fixes_base(self, A: ProjectiveMatrix) -> bool:
        """A 是否在点 1（内部编号 0）的稳定子群中"""
        return self.apply(A, 0) == 0


class PermutationExport(BaseModel):
    mu: int = Field(..., description="点数")
    e: List[int] = Field(..., description="e 的像，1 起编号")
    v: List[int] = Field(..., description="v 的像，1 起编号")
    l: List[int] = Field(..., description="l = e∘v⁻¹ 的像")
    r: List[int] = Field(..., description="r = e∘v⁻² 的像")


class PermInvariants(BaseModel):
    e2: int
    e3: int
    cusp_widths: List[int] = Field(..., description="l 的轮换长度，升序")
    level: int


def images(p: Permutation) -> List[int]:
    return [x + 1 for x in p.array_form]


def export_pair(pair: PermutationPair) -> PermutationExport:
    return PermutationExport(
        mu=pair.mu, e=images(pair.e), v=images(pair.v), l=images(pair.l), r=images(pair.r)
    )


def perm_invariants(pair: PermutationPair) -> PermInvariants:
    """e₂、e₃ 为 e、v 的不动点数，尖点宽度为 l 的各轮换长度"""
    widths = sorted(len(cycle) for cycle in pair.l.full_cyclic_form)
    return PermInvariants(
        e2=sum(1 for i in range(pair.mu) if pair.e(i) == i),
        e3=sum(1 for i in range(pair.mu) if pair.v(i) == i),
        cusp_widths=widths,
        level=lcm(*widths),
    )


def parse_cycles(text: str, mu: Optional[int] = None) -> Permutation:
    """
    解析轮换记号 "(1 2)(3 4 5)"，不动点可省略，"()" 为恒等

    Args:
        text: 轮换文本
        mu: 点数；省略时取出现过的最大点

    Raises:
        ParameterError: 格式错误、点重复或超出 mu
    """
    body = text.strip()
    if _CYCLE_RE.sub("", body).strip():
        raise ParameterError(f"无法解析轮换: {text!r}")
    cycles: List[List[int]] = []
    seen = set()
    for group in _CYCLE_RE.findall(body):
        tokens = group.replace(",", " ").split()
        if not tokens:
            continue
        if not all(_POINT_RE.fullmatch(t) and int(t) > 0 for t in tokens):
            raise ParameterError(f"轮换中的点必须是正整数: ({group})")
        points = [int(t) - 1 for t in tokens]
        if seen.intersection(points) or len(set(points)) != len(points):
            raise ParameterError(f"轮换之间有重复的点: {text!r}")
        seen.update(points)
        cycles.append(points)

    largest = max(seen) + 1 if seen else 1
    size = mu if mu is not None else largest
    if size < largest:
        raise ParameterError(f"轮换中的点 {largest} 超出点数 {size}")
    return Permutation(cycles, size=size) if cycles else identity(size)


def format_cycles(p: Permutation) -> str:
    cycles = p.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in cycle) + ")" for cycle in cycles)


def resize(perms: Sequence[Permutation]) -> Tuple[Permutation, ...]:
    """把若干置换扩充到相同点数"""
    size = max(p.size for p in perms)
    return tuple(Permutation(p.array_form + list(range(p.size, size))) for p in perms)


def pair_from_images(e: Iterable[int], v: Iterable[int]) -> PermutationPair:
    """由 1 起编号的像数组构造"""
    return PermutationPair(Permutation([x - 1 for x in e]), Permutation([x - 1 for x in v]))
