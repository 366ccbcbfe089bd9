"""
Services module - Diagram algebra, matrix functors, fast application, group actions and checks
"""

from .algebra import CategoryContext, ContextKind, DiagramSum, compose, tensor
from .fast_apply import apply_fast, planarize
from .functors import FunctorName, GroupTag, realize

__all__ = [
    "CategoryContext",
    "ContextKind",
    "DiagramSum",
    "compose",
    "tensor",
    "apply_fast",
    "planarize",
    "FunctorName",
    "GroupTag",
    "realize",
]
