"""
命令行入口

每个子命令都接受 --group / --symbol（二选一）、--json、--max-edges、--cap、--verbose。
结果写到 stdout；领域错误写到 stderr 并以 1 退出，用法错误由 click 以 2 退出。
"""
import functools
from typing import Callable, List, Optional

import click
from pydantic import BaseModel, Field

from core.config import settings
from core.exceptions import FareyException, InconclusiveError, InternalError, handle_exception
from core.logger import set_level, verbosity_level
from core.responses import render_json

from apps.psl2 import INFINITE_ORDER, element_order, format_matrix, parse_matrix
from apps.farey import (
    FareySymbol, edge_letter, generators, invariants, parse_symbol,
    polygon_geometry, render_svg
)
from apps.groups import GroupKind, GroupSpec, SymbolGroup, index_by_bfs, parse_group_spec
from apps.construction import construct_symbol
from apps.membership import contains, format_word
from apps.permutations import PermutationPair, export_pair, format_cycles, perm_invariants
from apps.cosets import coset_reps_from_symbol, congruence_hsu, congruence_wohlfahrt, export_cosets, perm_rep


class SymbolExport(BaseModel):
    symbol: str
    vertices: List[str]
    pairings: List[str]


class GeneratorEntry(BaseModel):
    name: str = Field(..., description="生成元名称 g1、g2 …")
    matrix: str = Field(..., description="a,b,c,d")
    order: str = Field(..., description="2、3 或 infinite")
    edges: List[int] = Field(..., description="对应的边序号")


class CongruenceReport(BaseModel):
    level: int
    hsu: Optional[bool] = None
    wohlfahrt: Optional[bool] = None
    congruence: Optional[bool] = None


class Session:
    """一次调用的输入：群描述或 Farey 符号，以及资源上限"""

    def __init__(self, group: Optional[str], symbol: Optional[str], as_json: bool,
                 max_edges: Optional[int], cap: Optional[int]):
        if group and symbol:
            raise click.UsageError("--group 与 --symbol 不能同时使用")
        if not group and not symbol:
            raise click.UsageError("需要给出 --group 或 --symbol")
        self.group_text = group
        self.symbol_text = symbol
        self.as_json = as_json
        self.max_edges = max_edges
        self.cap = cap
        self._spec: Optional[GroupSpec] = None
        self._symbol: Optional[FareySymbol] = None

    @property
    def spec(self) -> GroupSpec:
        if self._spec is None:
            if self.group_text:
                self._spec = parse_group_spec(self.group_text)
            else:
                self._spec = SymbolGroup(self.symbol)
        return self._spec

    @property
    def symbol(self) -> FareySymbol:
        if self._symbol is None:
            if self.symbol_text:
                self._symbol = parse_symbol(self.symbol_text)
            elif self.spec.kind is GroupKind.SYMBOL:
                self._symbol = self.spec.symbol
            else:
                self._symbol = construct_symbol(self.spec, max_edges=self.max_edges)
        return self._symbol

    def emit(self, model, text: str) -> None:
        click.echo(render_json(model) if self.as_json else text)


def common_options(func: Callable) -> Callable:
    """挂上公共选项，并把领域异常转换成退出码 1"""

    @click.option("--group", "group", metavar="SPEC", help="gamma0:N、gamma1:N、gamma:N、perm:…、symbol:…")
    @click.option("--symbol", "symbol", metavar="TEXT", help="Farey 符号文本")
    @click.option("--json", "as_json", is_flag=True, help="以 JSON 输出")
    @click.option("--max-edges", type=click.IntRange(min=3), help="构造符号时的边数上限")
    @click.option("--cap", type=click.IntRange(min=1), help="BFS 陪集枚举的上限")
    @click.option("--verbose", "-v", count=True, help="-v 输出 INFO，-vv 输出 DEBUG")
    @functools.wraps(func)
    def wrapper(group, symbol, as_json, max_edges, cap, verbose, **kwargs):
        if verbose:
            set_level(verbosity_level(verbose))
        session = Session(group, symbol, as_json, max_edges, cap)
        try:
            return func(session, **kwargs)
        except (FareyException, ArithmeticError) as exc:
            raise click.exceptions.Exit(handle_exception(exc, as_json=as_json))

    return wrapper


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=settings.APP_VERSION, prog_name=settings.APP_NAME)
def farey() -> None:
    """
    用 Farey 符号计算 PSL₂(ℤ) 的有限指数子群

    \b
    示例:
      farey symbol --group gamma:2
      farey invariants --group gamma0:2 --json
      farey contains --group gamma:2 --matrix 1,1,0,1
    """


@farey.command()
@common_options
def symbol(session: Session) -> None:
    """输出 Farey 符号"""
    F = session.symbol
    model = SymbolExport(
        symbol=str(F),
        vertices=[str(x) for x in F.sequence],
        pairings=[str(p) for p in F.pairings],
    )
    session.emit(model, str(F))


@farey.command(name="generators")
@common_options
def generators_command(session: Session) -> None:
    """输出独立生成元，顺序与成员判定字中的编号一致"""
    F = session.symbol
    gens = generators(F)
    edges: List[List[int]] = [[] for _ in gens]
    for i in range(F.edge_count):
        index, _ = edge_letter(F, i)
        edges[index].append(i)

    entries = []
    for index, g in enumerate(gens):
        order = element_order(g)
        entries.append(GeneratorEntry(
            name=f"g{index + 1}",
            matrix=format_matrix(g),
            order="infinite" if order == INFINITE_ORDER else str(order),
            edges=edges[index],
        ))
    text = "\n".join(f"{e.name} = {e.matrix}  (order {e.order})" for e in entries)
    session.emit(entries, text)


@farey.command(name="invariants")
@common_options
def invariants_command(session: Session) -> None:
    """输出指数、亏格、尖点、椭圆点与级"""
    inv = invariants(session.symbol)
    lines = [
        f"index: {inv.index}",
        f"genus: {inv.genus}",
        f"cusps: {inv.cusps}",
        f"rank: {inv.rank}",
        f"e2: {inv.e2}",
        f"e3: {inv.e3}",
        f"level: {inv.level}",
    ]
    lines += [f"cusp {' '.join(c.vertices)}: width {c.width}" for c in inv.cusp_classes]
    session.emit(inv, "\n".join(lines))


@farey.command(name="contains")
@common_options
@click.option("--matrix", "matrix", required=True, metavar="a,b,c,d", help="待判定的矩阵")
@click.option("--word", "show_word", is_flag=True, help="同时输出生成元字")
def contains_command(session: Session, matrix: str, show_word: bool) -> None:
    """判定矩阵是否属于该群，输出 yes 或 no"""
    A = parse_matrix(matrix)
    certificate = contains(session.symbol, A)
    text = "yes" if certificate.verdict else "no"
    if show_word and certificate.verdict:
        text += "\n" + format_word(certificate.word)
    session.emit(certificate, text)


@farey.command()
@common_options
@click.option("--method", type=click.Choice(["symbol", "bfs"]), default="symbol", show_default=True,
              help="由 Farey 符号的扇形公式或由 BFS 枚举")
def cosets(session: Session, method: str) -> None:
    """输出左陪集代表元，第一个为单位元"""
    if method == "bfs":
        _, reps = index_by_bfs(session.spec, cap=session.cap)
    else:
        reps = coset_reps_from_symbol(session.symbol)
    session.emit(export_cosets(reps), "\n".join(format_matrix(alpha) for alpha in reps))


@farey.command()
@common_options
def permrep(session: Session) -> None:
    """输出陪集置换表示 e、v、l、r（轮换记号，1 起编号）"""
    pair = perm_rep(session.symbol).pair
    lines = [
        f"mu: {pair.mu}",
        f"e: {format_cycles(pair.e)}",
        f"v: {format_cycles(pair.v)}",
        f"l: {format_cycles(pair.l)}",
        f"r: {format_cycles(pair.r)}",
    ]
    session.emit(export_pair(pair), "\n".join(lines))


def _pair_for(session: Session) -> PermutationPair:
    if session.group_text and session.spec.kind is GroupKind.PERM:
        return session.spec.pair
    return perm_rep(session.symbol).pair


@farey.command()
@common_options
@click.option("--method", type=click.Choice(["hsu", "wohlfahrt", "both"]), default="both", show_default=True)
def congruence(session: Session, method: str) -> None:
    """判定是否为同余子群"""
    report = CongruenceReport(level=0)
    if method in ("hsu", "both"):
        pair = _pair_for(session)
        report.level = perm_invariants(pair).level
        report.hsu = congruence_hsu(pair)
    if method in ("wohlfahrt", "both"):
        report.level = invariants(session.symbol).level
        try:
            report.wohlfahrt = congruence_wohlfahrt(session.symbol)
        except InconclusiveError:
            if method == "wohlfahrt":
                raise
    if report.hsu is not None and report.wohlfahrt is not None and report.hsu != report.wohlfahrt:
        raise InternalError(f"两种同余判定结果不一致: hsu={report.hsu}, wohlfahrt={report.wohlfahrt}")
    report.congruence = report.hsu if report.hsu is not None else report.wohlfahrt

    def verdict(value: Optional[bool]) -> str:
        return "inconclusive" if value is None else ("yes" if value else "no")

    lines = [f"level: {report.level}"]
    if method in ("hsu", "both"):
        lines.append(f"hsu: {verdict(report.hsu)}")
    if method in ("wohlfahrt", "both"):
        lines.append(f"wohlfahrt: {verdict(report.wohlfahrt)}")
    lines.append(f"congruence: {verdict(report.congruence)}")
    session.emit(report, "\n".join(lines))


@farey.command()
@common_options
@click.option("--format", "fmt", type=click.Choice(["json", "svg"]), default="json", show_default=True)
def domain(session: Session, fmt: str) -> None:
    """输出特殊多边形的边界（JSON 弧列表或 SVG）"""
    geometry = polygon_geometry(session.symbol)
    if fmt == "svg" and not session.as_json:
        click.echo(render_svg(geometry))
    else:
        click.echo(render_json(geometry))
