"""Exact Verlinde dimensions and their brick decompositions under finite Heisenberg groups."""

from .symplectic import MINUS, PLUS, Mod2Class, Mod4Class, SignConvention
from .verlinde import verlinde_dim, verlinde_dim_twisted

__version__ = "0.1.0"

__all__ = [
    "MINUS",
    "PLUS",
    "Mod2Class",
    "Mod4Class",
    "SignConvention",
    "verlinde_dim",
    "verlinde_dim_twisted",
    "__version__",
]
