"""Butson Hadamard matrices, their codes, Gray maps and propelinear structures."""

from .butson import LogMatrix, fourier, is_butson, kronecker
from .codes import Code, build_codes, min_distance
from .ring import PhaseParams

__all__ = [
    "Code",
    "LogMatrix",
    "PhaseParams",
    "build_codes",
    "fourier",
    "is_butson",
    "kronecker",
    "min_distance",
]
