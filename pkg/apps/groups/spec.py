"""
群的描述

同余子群族由级 N 给出；置换群由陪集置换表示给出，Γ 是点 1 的稳定子群；
符号群由 Farey 符号给出。
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from core.exceptions import ParameterError
from apps.farey import FareySymbol, parse_symbol
from apps.permutations import PermutationPair, format_cycles, parse_cycles, resize


class GroupKind(str, Enum):
    GAMMA0 = "gamma0"
    GAMMA1 = "gamma1"
    GAMMA = "gamma"
    PERM = "perm"
    SYMBOL = "symbol"


_FAMILIES = (GroupKind.GAMMA0, GroupKind.GAMMA1, GroupKind.GAMMA)


@dataclass(frozen=True)
class GroupSpec:
    kind: GroupKind
    level: int = 1
    pair: Optional[PermutationPair] = None
    symbol: Optional[FareySymbol] = None

    def __post_init__(self):
        if self.kind in _FAMILIES and self.level < 1:
            raise ParameterError(f"级 N 必须是正整数: {self.level}")
        if self.kind is GroupKind.PERM and self.pair is None:
            raise ParameterError("置换群需要给出置换对")
        if self.kind is GroupKind.SYMBOL and self.symbol is None:
            raise ParameterError("符号群需要给出 Farey 符号")

    @property
    def is_congruence_family(self) -> bool:
        return self.kind in _FAMILIES

    def __str__(self) -> str:
        return format_group_spec(self)


def Gamma0(N: int) -> GroupSpec:
    return GroupSpec(GroupKind.GAMMA0, level=N)


def Gamma1(N: int) -> GroupSpec:
    return GroupSpec(GroupKind.GAMMA1, level=N)


def GammaFull(N: int) -> GroupSpec:
    return GroupSpec(GroupKind.GAMMA, level=N)


def PermGroup(pair: PermutationPair) -> GroupSpec:
    return GroupSpec(GroupKind.PERM, pair=pair)


def SymbolGroup(F: FareySymbol) -> GroupSpec:
    return GroupSpec(GroupKind.SYMBOL, symbol=F)


_LEVEL_RE = re.compile(r"[0-9]+")


def _parse_level(text: str, raw: str) -> int:
    if not _LEVEL_RE.fullmatch(text.strip()) or int(text) < 1:
        raise ParameterError(f"级 N 必须是正整数: {raw!r}")
    return int(text)


def _parse_perm(body: str, raw: str) -> PermutationPair:
    fields: Dict[str, str] = {}
    for part in body.split(","):
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in ("l", "r", "e", "v", "mu") or key in fields:
            raise ParameterError(f"置换群应写作 perm:l=…,r=… 或 perm:e=…,v=…: {raw!r}")
        fields[key] = value.strip()

    mu = _parse_level(fields["mu"], raw) if "mu" in fields else None
    if set(fields) - {"mu"} == {"l", "r"}:
        l, r = resize([parse_cycles(fields["l"], mu), parse_cycles(fields["r"], mu)])
        return PermutationPair.from_lr(l, r)
    if set(fields) - {"mu"} == {"e", "v"}:
        e, v = resize([parse_cycles(fields["e"], mu), parse_cycles(fields["v"], mu)])
        return PermutationPair.from_ev(e, v)
    raise ParameterError(f"置换群需要 l,r 或 e,v 两个置换: {raw!r}")


def parse_group_spec(text: str) -> GroupSpec:
    """
    解析 gamma0:N、gamma1:N、gamma:N、perm:l=…,r=…、perm:e=…,v=…、symbol:<文本>

    Raises:
        ParameterError: 未知的群描述或参数错误
    """
    prefix, sep, body = text.strip().partition(":")
    prefix = prefix.strip().lower()
    if not sep:
        raise ParameterError(f"群描述缺少冒号: {text!r}")
    if prefix == "gamma0":
        return Gamma0(_parse_level(body, text))
    if prefix == "gamma1":
        return Gamma1(_parse_level(body, text))
    if prefix == "gamma":
        return GammaFull(_parse_level(body, text))
    if prefix == "perm":
        return PermGroup(_parse_perm(body, text))
    if prefix == "symbol":
        return SymbolGroup(parse_symbol(body))
    raise ParameterError(f"未知的群描述: {text!r}")


def format_group_spec(spec: GroupSpec) -> str:
    if spec.is_congruence_family:
        return f"{spec.kind.value}:{spec.level}"
    if spec.kind is GroupKind.PERM:
        pair = spec.pair
        return f"perm:e={format_cycles(pair.e)},v={format_cycles(pair.v)},mu={pair.mu}"
    return f"symbol:{spec.symbol}"
