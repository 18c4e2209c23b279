from .cosets import CosetTable, CosetsExport, coset_reps_from_symbol, perm_rep, export_cosets
from .congruence import congruence_hsu, congruence_wohlfahrt
from apps.permutations import PermutationPair, PermInvariants, perm_invariants, parse_cycles, format_cycles

__all__ = [
    # 陪集
    'CosetTable', 'CosetsExport', 'coset_reps_from_symbol', 'perm_rep', 'export_cosets',
    # 置换表示
    'PermutationPair', 'PermInvariants', 'perm_invariants', 'parse_cycles', 'format_cycles',
    # 同余判定
    'congruence_hsu', 'congruence_wohlfahrt',
]
