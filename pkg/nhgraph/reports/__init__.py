"""Output writers and figure datasets."""

from .figures import FigureBuilder, FigureData
from .writers import DataWriter

__all__ = [
    'DataWriter',
    'FigureBuilder',
    'FigureData',
]
