from .symbol import EVEN, ODD, FareySymbol, Pairing, PairingKind, format_symbol
from .parser import parse_symbol
from .generators import edge_letter, even_pairing, free_pairing, generator_for_edge, generators, odd_pairing
from .invariants import CuspClass, GroupInvariants, UnionFind, cusp_partition, doubled_vertex_widths, invariants
from .geometry import Arc, OddCorner, PolygonGeometry, odd_corner, polygon_geometry
from .svg import render_svg

__all__ = [
    # 符号
    'EVEN', 'ODD', 'FareySymbol', 'Pairing', 'PairingKind', 'parse_symbol', 'format_symbol',
    # 生成元
    'edge_letter', 'even_pairing', 'free_pairing', 'generator_for_edge', 'generators', 'odd_pairing',
    # 不变量
    'CuspClass', 'GroupInvariants', 'UnionFind', 'cusp_partition', 'doubled_vertex_widths', 'invariants',
    # 几何
    'Arc', 'OddCorner', 'PolygonGeometry', 'odd_corner', 'polygon_geometry', 'render_svg',
]
