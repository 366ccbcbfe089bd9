"""
Core module - Diagram types, counting, notation and file formats
"""

from .errors import DiagramEngineError, DiagramValidationError
from .setpart import Diagram, DiagramKind, DiagramShape, SetPartition
from .notation import format_diagram, parse_diagram

__all__ = [
    "DiagramEngineError",
    "DiagramValidationError",
    "Diagram",
    "DiagramKind",
    "DiagramShape",
    "SetPartition",
    "format_diagram",
    "parse_diagram",
]
