"""Motivic DT invariants for crepant resolutions of C^3 / D_2l."""

from __future__ import annotations

from .dtengine import (
    a_series_ar,
    a_series_closed,
    extract_dt,
    ncdt_series,
    omega,
    omega_table,
)
from .exactscalar import ONE, Q, X, ZERO, Scalar
from .fqoracle import coefficient_check, count_JI
from .mckay import extract_reduction, mckay_quiver
from .powerseries import Series, pleth_exp, pleth_log
from .rootsystem import build, classify, positive_roots

__version__ = "0.1.0"

__all__ = [
    "Scalar", "ZERO", "ONE", "X", "Q",
    "Series", "pleth_exp", "pleth_log",
    "build", "classify", "positive_roots",
    "mckay_quiver", "extract_reduction",
    "omega", "omega_table", "a_series_closed", "a_series_ar", "extract_dt", "ncdt_series",
    "count_JI", "coefficient_check",
]
