from .fraction import (
    ExtFraction, INFINITY, NEG_INFINITY, ZERO,
    det_pairing, mediant, parse_fraction, format_fraction
)
from .matrix import (
    ProjectiveMatrix, IDENTITY, E, V, L, R, INFINITE_ORDER,
    normalize, multiply, inverse, act, element_order, parse_matrix, format_matrix
)
from .words import LRWord, EVWord, lr_word, ev_word, evaluate_lr_word, evaluate_ev_word

__all__ = [
    # 扩展有理数
    'ExtFraction', 'INFINITY', 'NEG_INFINITY', 'ZERO',
    'det_pairing', 'mediant', 'parse_fraction', 'format_fraction',
    # 矩阵
    'ProjectiveMatrix', 'IDENTITY', 'E', 'V', 'L', 'R', 'INFINITE_ORDER',
    'normalize', 'multiply', 'inverse', 'act', 'element_order', 'parse_matrix', 'format_matrix',
    # 字
    'LRWord', 'EVWord', 'lr_word', 'ev_word', 'evaluate_lr_word', 'evaluate_ev_word',
]
