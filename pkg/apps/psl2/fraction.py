"""
扩展有理数

ℚ ∪ {∞} 中的元素，∞ 有两种写法：序列左端的 -1/0 和右端的 1/0。
两者在序列中的位置不同，但作为尖点是同一个点，见 ExtFraction.cusp()。
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd

from core.exceptions import ParameterError

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


@total_ordering
@dataclass(frozen=True, slots=True)
class ExtFraction:
    """
    既约分数 p/q（q ≥ 0）或形式无穷 ±1/0

    直接构造时调用方负责保证既约；不确定时使用 ExtFraction.of。
    """
    p: int
    q: int

    @classmethod
    def of(cls, p: int, q: int = 1) -> "ExtFraction":
        """
        约分并规范符号后构造

        Raises:
            ParameterError: p 与 q 同时为 0
        """
        if p == 0 and q == 0:
            raise ParameterError("0/0 不是扩展有理数")
        if q == 0:
            return cls(1 if p > 0 else -1, 0)
        if q < 0:
            p, q = -p, -q
        g = gcd(p, q)
        return cls(p // g, q // g)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def cusp(self) -> "ExtFraction":
        """作为尖点的代表元：两种无穷都归为 1/0"""
        return INFINITY if self.q == 0 else self

    def as_fraction(self) -> Fraction:
        if self.q == 0:
            raise ParameterError("无穷远点没有有限值")
        return Fraction(self.p, self.q)

    def _rank(self) -> int:
        if self.q:
            return 0
        return -1 if self.p < 0 else 1

    def __lt__(self, other: "ExtFraction") -> bool:
        if not isinstance(other, ExtFraction):
            return NotImplemented
        left, right = self._rank(), other._rank()
        if left or right:
            return left < right
        # 分母非负，交叉相乘保持顺序
        return self.p * other.q < other.p * self.q

    def __str__(self) -> str:
        return format_fraction(self)


NEG_INFINITY = ExtFraction(-1, 0)
INFINITY = ExtFraction(1, 0)
ZERO = ExtFraction(0, 1)


def det_pairing(x: ExtFraction, y: ExtFraction) -> int:
    """p_y·q_x − p_x·q_y；相邻 Farey 顶点之间恒为 1，在 PSL₂(ℤ) 作用下不变"""
    return y.p * x.q - x.p * y.q


def mediant(x: ExtFraction, y: ExtFraction) -> ExtFraction:
    """
    两个相邻分数的中间分数 (p+p')/(q+q')

    Raises:
        ParameterError: det_pairing(x, y) ≠ 1
    """
    if det_pairing(x, y) != 1:
        raise ParameterError(f"{x} 与 {y} 不是 Farey 邻居，无法取中间分数")
    return ExtFraction(x.p + y.p, x.q + y.q)


def parse_fraction(text: str) -> ExtFraction:
    """
    解析 "p/q"、整数 "n"、"oo" 或 "-oo"

    Raises:
        ParameterError: 文本格式错误
    """
    token = text.strip()
    if token in ("oo", "+oo"):
        return INFINITY
    if token == "-oo":
        return NEG_INFINITY
    match = _FRACTION_RE.match(token)
    if not match:
        raise ParameterError(f"无法解析分数: {text!r}")
    p = int(match.group(1))
    q = int(match.group(2)) if match.group(2) is not None else 1
    return ExtFraction.of(p, q)


def format_fraction(x: ExtFraction) -> str:
    if x.q == 0:
        return "-oo" if x.p < 0 else "oo"
    if x.q == 1:
        return str(x.p)
    return f"{x.p}/{x.q}"
