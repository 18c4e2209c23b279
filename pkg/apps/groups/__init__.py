from .spec import (
    GroupKind, GroupSpec, Gamma0, Gamma1, GammaFull, PermGroup, SymbolGroup,
    parse_group_spec, format_group_spec
)
from .oracles import is_member, index_by_bfs, default_cap

__all__ = [
    'GroupKind', 'GroupSpec', 'Gamma0', 'Gamma1', 'GammaFull', 'PermGroup', 'SymbolGroup',
    'parse_group_spec', 'format_group_spec',
    'is_member', 'index_by_bfs', 'default_cap',
]
