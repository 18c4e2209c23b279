from .llt import (
    Terminal, MembershipCertificate,
    contains, is_member, word_to_matrix, reduce_to_polygon, coset_key, format_word
)

__all__ = [
    'Terminal', 'MembershipCertificate',
    'contains', 'is_member', 'word_to_matrix', 'reduce_to_polygon', 'coset_key', 'format_word',
]
