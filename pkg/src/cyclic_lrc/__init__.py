"""Cyclic locally recoverable codes: construction, locality certificates,
bounds, and an exhaustive enumeration oracle."""
from __future__ import annotations

from .codespec import CodeSpecFile
from .cyclic_code import CyclicCode, bch_bound
from .finite_field import build_field, field_of_order
from .lrc_rs import RsLrcCode, OptimalCyclicParams, optimal_cyclic_code

__version__ = "0.1.0"

__all__ = [
    "CodeSpecFile",
    "CyclicCode",
    "RsLrcCode",
    "OptimalCyclicParams",
    "bch_bound",
    "build_field",
    "field_of_order",
    "optimal_cyclic_code",
]
