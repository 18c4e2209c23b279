from .commands import farey

__all__ = ['farey']
