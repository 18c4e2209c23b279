"""
特殊多边形的边界

偶边与自由边各是一整段测地线；奇边在 γ(ρ) 处折成两段，
其中 γ = (a_r a_l; b_r b_l) 把 0、∞ 送到边的两个端点，ρ = e^{iπ/3}。
折点保存为矩阵 γ 和精确坐标，不用浮点数。
"""
from fractions import Fraction
from math import sqrt
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from apps.psl2 import ExtFraction, ProjectiveMatrix, format_matrix

from .symbol import FareySymbol, PairingKind

RHO_IMAGE = "rho-image"

_ARC_KIND = {
    PairingKind.EVEN: "even-edge",
    PairingKind.ODD: "odd-edge",
    PairingKind.FREE: "f-edge",
}


class OddCorner(BaseModel):
    """γ(ρ)，实部为有理数，虚部为 √3 / imag_denominator"""
    matrix: str = Field(..., description="γ，格式 a,b,c,d")
    real: str = Field(..., description="实部的精确值")
    imag_denominator: int = Field(..., description="虚部等于 √3 除以该整数")

    def point(self) -> complex:
        return complex(float(Fraction(self.real)), sqrt(3) / self.imag_denominator)


class Arc(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    from_: str = Field(..., alias="from", description="起点，折点记作 rho-image")
    to: str = Field(..., description="终点，折点记作 rho-image")
    kind: str = Field(..., description="even-edge / odd-edge / f-edge")
    pairing: str = Field(..., description="配对标记 e、o 或自由标签")
    edge: int = Field(..., description="所属的边序号")
    corner: Optional[OddCorner] = Field(None, description="奇边的折点")


class PolygonGeometry(BaseModel):
    symbol: str = Field(..., description="Farey 符号文本")
    vertices: List[str] = Field(..., description="完整序列 −1/0, x₀, …, xₙ, 1/0")
    arcs: List[Arc] = Field(default_factory=list)


def odd_corner(left: ExtFraction, right: ExtFraction) -> OddCorner:
    """奇边 (left, right) 的折点 γ(ρ)"""
    gamma = ProjectiveMatrix.of(right.p, left.p, right.q, left.q)
    a, b, c, d = gamma.entries
    k = c * c + c * d + d * d
    real = Fraction(2 * a * c + 2 * b * d + a * d + b * c, 2 * k)
    return OddCorner(matrix=format_matrix(gamma), real=str(real), imag_denominator=2 * k)


def polygon_geometry(F: FareySymbol) -> PolygonGeometry:
    arcs: List[Arc] = []
    for i, pairing in enumerate(F.pairings):
        left, right = F.edge(i)
        kind = _ARC_KIND[pairing.kind]
        label = str(pairing)
        if pairing.kind is PairingKind.ODD:
            corner = odd_corner(left, right)
            arcs.append(Arc(from_=str(left), to=RHO_IMAGE, kind=kind, pairing=label, edge=i, corner=corner))
            arcs.append(Arc(from_=RHO_IMAGE, to=str(right), kind=kind, pairing=label, edge=i, corner=corner))
        else:
            arcs.append(Arc(from_=str(left), to=str(right), kind=kind, pairing=label, edge=i))
    return PolygonGeometry(symbol=str(F), vertices=[str(x) for x in F.sequence], arcs=arcs)
