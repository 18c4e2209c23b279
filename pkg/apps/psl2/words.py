"""
L/R 与 E/V 字

L/R 分解就是对矩阵第二行做欧几里得除法；E/V 字由 L = EV⁻¹、R = EV⁻²
逐字母代换后在 E² = V³ = 1 下约化得到。
"""
from dataclasses import dataclass
from typing import ClassVar, Dict, Iterable, Iterator, List, Tuple

from core.exceptions import ParameterError

from .matrix import E, IDENTITY, L, R, V, ProjectiveMatrix

Term = Tuple[str, int]


@dataclass(frozen=True)
class _Word:
    """字母与非零指数的有序列表，相邻字母互不相同"""
    terms: Tuple[Term, ...] = ()

    LETTERS: ClassVar[Dict[str, ProjectiveMatrix]] = {}

    @classmethod
    def reduced(cls, terms: Iterable[Term]) -> "_Word":
        """合并相邻的相同字母并删去零指数"""
        stack: List[Term] = []
        for letter, exponent in terms:
            if letter not in cls.LETTERS:
                raise ParameterError(f"未知字母: {letter}")
            if stack and stack[-1][0] == letter:
                exponent += stack.pop()[1]
            exponent = cls._reduce_exponent(letter, exponent)
            if exponent:
                stack.append((letter, exponent))
        return cls(tuple(stack))

    @classmethod
    def _reduce_exponent(cls, letter: str, exponent: int) -> int:
        return exponent

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def matrix(self) -> ProjectiveMatrix:
        result = IDENTITY
        for letter, exponent in self.terms:
            result = result * self.LETTERS[letter] ** exponent
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "1"
        return " ".join(letter if k == 1 else f"{letter}^{k}" for letter, k in self.terms)


@dataclass(frozen=True)
class LRWord(_Word):
    LETTERS: ClassVar[Dict[str, ProjectiveMatrix]] = {"L": L, "R": R}


@dataclass(frozen=True)
class EVWord(_Word):
    """E 的指数只取 1，V 的指数取 −1 或 −2"""
    LETTERS: ClassVar[Dict[str, ProjectiveMatrix]] = {"E": E, "V": V}

    @classmethod
    def _reduce_exponent(cls, letter: str, exponent: int) -> int:
        if letter == "E":
            return exponent % 2
        # V³ = 1：余 1 记作 V⁻²，余 2 记作 V⁻¹
        return {0: 0, 1: -2, 2: -1}[exponent % 3]


def lr_word(A: ProjectiveMatrix) -> LRWord:
    """
    把 A 写成 L、R 的字

    在第二行 (c, d) 上做欧几里得除法，每一步右乘 L^{-k} 或 R^{-k}，
    直到 c = 0（剩下 L 的幂）或 d = 0（剩下 L^{ac}·E，E = L R⁻¹ L）。
    """
    a, b, c, d = A.a, A.b, A.c, A.d
    applied: List[Term] = []
    while c != 0 and d != 0:
        if abs(d) >= abs(c):
            k = d // c
            b, d = b - k * a, d - k * c
            applied.append(("L", -k))
        else:
            k = c // d
            a, c = a - k * b, c - k * d
            applied.append(("R", -k))

    if c == 0:
        # d = ±1，矩阵为 ±L^{b/d}
        head: List[Term] = [("L", b * d)]
    else:
        head = [("L", a * c), ("L", 1), ("R", -1), ("L", 1)]

    tail = [(letter, -exponent) for letter, exponent in reversed(applied)]
    return LRWord.reduced(head + tail)


_EV_SUBSTITUTION: Dict[Tuple[str, int], List[Term]] = {
    ("L", 1): [("E", 1), ("V", -1)],
    ("L", -1): [("V", -2), ("E", 1)],
    ("R", 1): [("E", 1), ("V", -2)],
    ("R", -1): [("V", -1), ("E", 1)],
}


def ev_word(A: ProjectiveMatrix) -> EVWord:
    """把 A 写成 E、V 的字，V 的指数取 −1 或 −2"""
    terms: List[Term] = []
    for letter, exponent in lr_word(A):
        unit = _EV_SUBSTITUTION[(letter, 1 if exponent > 0 else -1)]
        for _ in range(abs(exponent)):
            terms.extend(unit)
    return EVWord.reduced(terms)


def evaluate_lr_word(word: Iterable[Term]) -> ProjectiveMatrix:
    return LRWord.reduced(word).matrix()


def evaluate_ev_word(word: Iterable[Term]) -> ProjectiveMatrix:
    return EVWord.reduced(word).matrix()
