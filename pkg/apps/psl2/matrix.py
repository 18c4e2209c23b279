"""
PSL₂(ℤ) 元素

矩阵以符号规范形式保存（c > 0，或 c = 0 且 d > 0），
因此 {M, −M} 只有一个代表元，相等判断就是逐项比较。
"""
import math
import re
from dataclasses import dataclass
from typing import Tuple

from core.exceptions import ParameterError

from .fraction import INFINITY, ExtFraction

# 无穷阶元素的阶
INFINITE_ORDER = math.inf

_MATRIX_RE = re.compile(r"^\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*$")


@dataclass(frozen=True, slots=True)
class ProjectiveMatrix:
    """
    行优先存储的 (a b; c d)，行列式为 1 且符号已规范

    不要直接构造，使用 normalize 或 ProjectiveMatrix.of。
    """
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def of(cls, a: int, b: int, c: int, d: int) -> "ProjectiveMatrix":
        """
        校验行列式后取符号规范的代表元

        Raises:
            ParameterError: 行列式不等于 1
        """
        if a * d - b * c != 1:
            raise ParameterError(f"行列式必须为 1: ({a},{b},{c},{d})")
        return cls._canonical(a, b, c, d)

    @classmethod
    def _canonical(cls, a: int, b: int, c: int, d: int) -> "ProjectiveMatrix":
        if c < 0 or (c == 0 and d < 0):
            return cls(-a, -b, -c, -d)
        return cls(a, b, c, d)

    @property
    def entries(self) -> Tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __mul__(self, other: "ProjectiveMatrix") -> "ProjectiveMatrix":
        if not isinstance(other, ProjectiveMatrix):
            return NotImplemented
        return ProjectiveMatrix._canonical(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "ProjectiveMatrix":
        return ProjectiveMatrix._canonical(self.d, -self.b, -self.c, self.a)

    def __pow__(self, k: int) -> "ProjectiveMatrix":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = IDENTITY
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def act(self, x: ExtFraction) -> ExtFraction:
        """Möbius 作用 x ↦ (ax+b)/(cx+d)，结果为无穷时统一记作 1/0"""
        p = self.a * x.p + self.b * x.q
        q = self.c * x.p + self.d * x.q
        if q == 0:
            return INFINITY
        if q < 0:
            p, q = -p, -q
        # 幺模矩阵保持既约
        return ExtFraction(p, q)

    def is_identity(self) -> bool:
        return self == IDENTITY

    def __str__(self) -> str:
        return format_matrix(self)


IDENTITY = ProjectiveMatrix(1, 0, 0, 1)
E = ProjectiveMatrix(0, -1, 1, 0)
V = ProjectiveMatrix(-1, -1, 1, 0)
L = ProjectiveMatrix(1, 1, 0, 1)
R = ProjectiveMatrix(1, 0, 1, 1)


def normalize(a: int, b: int, c: int, d: int) -> ProjectiveMatrix:
    """把整数矩阵规范为 PSL₂(ℤ) 元素；normalize(M) = normalize(−M)"""
    return ProjectiveMatrix.of(a, b, c, d)


def multiply(x: ProjectiveMatrix, y: ProjectiveMatrix) -> ProjectiveMatrix:
    return x * y


def inverse(x: ProjectiveMatrix) -> ProjectiveMatrix:
    return x.inverse()


def act(g: ProjectiveMatrix, x: ExtFraction) -> ExtFraction:
    return g.act(x)


def element_order(A: ProjectiveMatrix) -> float:
    """
    元素的阶

    Returns:
        1、2、3 或 INFINITE_ORDER
    """
    if A == IDENTITY:
        return 1
    t = A.trace
    if t == 0:
        return 2
    if abs(t) == 1:
        return 3
    return INFINITE_ORDER


def parse_matrix(text: str) -> ProjectiveMatrix:
    """
    解析 "a,b,c,d"

    Raises:
        ParameterError: 格式错误或行列式不为 1
    """
    match = _MATRIX_RE.match(text)
    if not match:
        raise ParameterError(f"矩阵格式应为 a,b,c,d: {text!r}")
    return normalize(*(int(g) for g in match.groups()))


def format_matrix(A: ProjectiveMatrix) -> str:
    return f"{A.a},{A.b},{A.c},{A.d}"
