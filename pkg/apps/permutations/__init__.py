from .pair import (
    PermutationPair, PermutationExport, PermInvariants,
    compose, identity, images, export_pair, perm_invariants,
    parse_cycles, format_cycles, resize, pair_from_images
)

__all__ = [
    'PermutationPair', 'PermutationExport', 'PermInvariants',
    'compose', 'identity', 'images', 'export_pair', 'perm_invariants',
    'parse_cycles', 'format_cycles', 'resize', 'pair_from_images',
]
