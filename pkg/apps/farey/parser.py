"""
Farey 符号文本

    symbol ::= "[" "-oo" frac+ "oo" "|" pairing+ "]"

分数升序，配对记号为 e、o 或正整数，记号之间以空白分隔。
"""
import re
from typing import List

from core.exceptions import InternalError, ParameterError, SymbolError

from apps.psl2 import INFINITY, NEG_INFINITY, parse_fraction

from .invariants import invariants
from .symbol import EVEN, ODD, FareySymbol, Pairing, format_symbol

# 只接受 ASCII 数字，上标数字等 isdigit 为真但 int 无法解析
_POSITIVE_RE = re.compile(r"[0-9]+")


def _parse_pairing(token: str, edge: int) -> Pairing:
    if token == "e":
        return EVEN
    if token == "o":
        return ODD
    if _POSITIVE_RE.fullmatch(token) and int(token) > 0:
        return Pairing.free(int(token))
    raise SymbolError(f"第 {edge} 条边的配对记号无效: {token!r}", edge=edge)


def parse_symbol(text: str) -> FareySymbol:
    """
    解析并校验 Farey 符号

    两个指数公式不一致的退化符号（例如 [-oo 0 oo | 1 1]）同样被拒绝。

    Raises:
        SymbolError: 文法错误或不变量不成立
    """
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")) or body.count("|") != 1:
        raise SymbolError(f"Farey 符号应形如 [-oo ... oo | ...]: {text!r}")
    left, right = body[1:-1].split("|")
    fraction_tokens, pairing_tokens = left.split(), right.split()
    if len(fraction_tokens) < 3 or fraction_tokens[0] != "-oo" or fraction_tokens[-1] != "oo":
        raise SymbolError("序列必须以 -oo 开始、以 oo 结束，且至少含一个有限顶点")

    try:
        fractions = [parse_fraction(token) for token in fraction_tokens[1:-1]]
    except ParameterError as exc:
        raise SymbolError(exc.message) from exc
    for i, x in enumerate(fractions):
        if x in (INFINITY, NEG_INFINITY):
            raise SymbolError(f"顶点 x{i} 不能是无穷", edge=i + 1)
    pairings: List[Pairing] = [_parse_pairing(token, i) for i, token in enumerate(pairing_tokens)]

    F = FareySymbol(tuple(fractions), tuple(pairings))
    try:
        invariants(F)
    except InternalError as exc:
        raise SymbolError(f"退化的 Farey 符号: {exc.message}") from exc
    return F


__all__ = ["parse_symbol", "format_symbol"]
