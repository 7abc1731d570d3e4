"""Exact intersection theory, Riemann-Roch and rank 2 instanton invariants on X_c = P(F_c)."""

from .chow import ChowElement, ThreefoldModel, degree, graded_component, make_model, ring_add, ring_mul
from .chern import SheafClass, euler_characteristic, twist
from .expr import parse_expression
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ChowElement",
    "SheafClass",
    "ThreefoldModel",
    "degree",
    "euler_characteristic",
    "graded_component",
    "make_model",
    "parse_expression",
    "ring_add",
    "ring_mul",
    "twist",
]
