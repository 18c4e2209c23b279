"""
群不变量

由 Farey 符号直接读出 e₂、e₃、r、尖点等价类与宽度、亏格、指数与级。
两个指数公式 μ = 3n + e₃ 与 μ = 3e₂ + 4e₃ + 12g + 6t − 12 必须一致，
类宽度之和也必须等于 μ，否则说明符号本身是退化的。
"""
from functools import lru_cache
from math import lcm
from typing import Dict, List

from pydantic import BaseModel, Field

from core.exceptions import InternalError
from core.logger import debug

from .symbol import FareySymbol, PairingKind


class UnionFind:
    """按秩合并并压缩路径的并查集，元素为 0..size-1"""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        px, py = self.find(x), self.find(y)
        if px == py:
            return
        if self.rank[px] < self.rank[py]:
            px, py = py, px
        self.parent[py] = px
        if self.rank[px] == self.rank[py]:
            self.rank[px] += 1

    def groups(self) -> List[List[int]]:
        """各等价类，按最小元素排序，类内元素升序"""
        classes: Dict[int, List[int]] = {}
        for x in range(len(self.parent)):
            classes.setdefault(self.find(x), []).append(x)
        return sorted(classes.values(), key=lambda members: members[0])


class CuspClass(BaseModel):
    vertices: List[str] = Field(..., description="该尖点类包含的顶点，无穷远点记作 oo")
    width: int = Field(..., description="尖点宽度")


class GroupInvariants(BaseModel):
    index: int = Field(..., description="指数 μ")
    genus: int = Field(..., description="亏格 g")
    cusps: int = Field(..., description="尖点个数 t")
    rank: int = Field(..., description="自由配对对数 r")
    e2: int = Field(..., description="2 阶椭圆点个数")
    e3: int = Field(..., description="3 阶椭圆点个数")
    level: int = Field(..., description="级，即各尖点宽度的最小公倍数")
    cusp_classes: List[CuspClass] = Field(default_factory=list, description="尖点等价类")

    def cusp_widths(self) -> List[int]:
        return sorted(c.width for c in self.cusp_classes)


def cusp_partition(F: FareySymbol) -> UnionFind:
    """
    序列位置上的尖点等价关系

    位置 0 与 n+2 都是 ∞；偶边、奇边连接两端点，
    自由边对 (i, j) 连接 x_i ~ x_{j+1} 与 x_{i+1} ~ x_j。
    """
    size = F.edge_count + 1
    uf = UnionFind(size)
    uf.union(0, size - 1)
    for i, pairing in enumerate(F.pairings):
        if not pairing.is_free:
            uf.union(i, i + 1)
    for i, j in F.free_pairs():
        uf.union(i, j + 1)
        uf.union(i + 1, j)
    return uf


def doubled_vertex_widths(F: FareySymbol) -> List[int]:
    """
    各序列位置上顶点宽度的两倍，下标 0 代表 ∞，最后一个位置记 0

    有限顶点取左右邻居的行列式绝对值，每条相邻奇边再加 ½。
    """
    seq = F.sequence
    odd = [p.kind is PairingKind.ODD for p in F.pairings]
    last = len(seq) - 1
    widths = [0] * len(seq)
    x0, xn = seq[1], seq[last - 1]
    widths[0] = 2 * abs(xn.p * x0.q - x0.p * xn.q) + odd[0] + odd[-1]
    for k in range(1, last):
        left, right = seq[k - 1], seq[k + 1]
        widths[k] = 2 * abs(left.p * right.q - right.p * left.q) + odd[k - 1] + odd[k]
    return widths


@lru_cache(maxsize=256)
def invariants(F: FareySymbol) -> GroupInvariants:
    """
    计算群不变量

    Raises:
        InternalError: 亏格或宽度不是整数、两个指数公式不一致或宽度和不等于指数
    """
    e2, e3, r, n = F.e2, F.e3, F.r, F.n
    if n + 2 != 2 * r + e2 + e3:
        raise InternalError(f"边数 {n + 2} 与 2r+e₂+e₃ = {2 * r + e2 + e3} 不一致")

    seq = F.sequence
    last = len(seq) - 1
    doubled = doubled_vertex_widths(F)
    classes: List[CuspClass] = []
    for members in cusp_partition(F).groups():
        total = sum(doubled[k] for k in members)
        if total % 2:
            raise InternalError(f"尖点类 {members} 的宽度不是整数")
        names = [str(seq[k].cusp()) for k in members if k != last]
        classes.append(CuspClass(vertices=names, width=total // 2))

    t = len(classes)
    if (r - t + 1) % 2:
        raise InternalError(f"亏格 (r−t+1)/2 = ({r}−{t}+1)/2 不是整数")
    genus = (r - t + 1) // 2
    index = 3 * n + e3
    hurwitz = 3 * e2 + 4 * e3 + 12 * genus + 6 * t - 12
    if index < 1 or genus < 0 or index != hurwitz:
        raise InternalError(f"指数公式不一致: 3n+e₃ = {index}，3e₂+4e₃+12g+6t−12 = {hurwitz}")
    width_sum = sum(c.width for c in classes)
    if width_sum != index or any(c.width <= 0 for c in classes):
        raise InternalError(f"尖点宽度之和 {width_sum} 不等于指数 {index}")

    debug(f"不变量: μ={index} g={genus} t={t} r={r} e₂={e2} e₃={e3}")
    return GroupInvariants(
        index=index,
        genus=genus,
        cusps=t,
        rank=r,
        e2=e2,
        e3=e3,
        level=lcm(*(c.width for c in classes)),
        cusp_classes=classes,
    )
