from .builder import (
    construct_symbol, INSERTION_POLICIES, PSL2_SYMBOL, GAMMA_SQUARED_SYMBOL
)

__all__ = ['construct_symbol', 'INSERTION_POLICIES', 'PSL2_SYMBOL', 'GAMMA_SQUARED_SYMBOL']
