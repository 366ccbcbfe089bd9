"""
Diagram Engine Package

Exact engine for partition, Brauer and (l+k)\\n diagrams: enumeration,
composition and tensor product, the matrix functors onto S_n, O(n), Sp(n)
and SO(n) equivariant maps, and fast factored application.
"""

__version__ = "1.0.0"

from .core.setpart import Diagram, DiagramShape, make_diagram
from .services.algebra import CategoryContext, ContextKind, DiagramSum, compose, tensor
from .services.functors import realize

__all__ = [
    "Diagram",
    "DiagramShape",
    "make_diagram",
    "CategoryContext",
    "ContextKind",
    "DiagramSum",
    "compose",
    "tensor",
    "realize",
]
