# errors.py - Hierarki exception untuk seluruh engine diagram
# Semua error validasi juga turunan ValueError supaya pemanggil lama yang menangkap ValueError tetap jalan

from typing import Iterable, Optional


class DiagramEngineError(Exception):
    """Base class for every error raised by the engine."""


class DiagramValidationError(DiagramEngineError, ValueError):
    """Raised when a diagram, partition or sum is malformed."""


class OverlappingBlocks(DiagramValidationError):
    def __init__(self, vertex: int, first: Iterable[int], second: Iterable[int]):
        self.vertex = vertex
        super().__init__(
            f"vertex {vertex} appears in two blocks: {sorted(first)} and {sorted(second)}"
        )


class UncoveredVertex(DiagramValidationError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is not covered by any block")


class EmptyBlock(DiagramValidationError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"block #{index} is empty")


class VertexOutOfRange(DiagramValidationError):
    def __init__(self, vertex: int, size: int):
        self.vertex = vertex
        self.size = size
        super().__init__(f"vertex {vertex} is outside 1..{size}")


class NotBrauerGrood(DiagramValidationError):
    """Diagram is not an (l+k)\\n diagram for the requested n."""


class NotBrauer(DiagramValidationError):
    """Diagram has a block whose size is not exactly two."""


class ShapeMismatch(DiagramValidationError):
    """Shapes (or vector lengths) do not chain / agree."""


class KindNotInContext(DiagramValidationError):
    """A diagram kind is used in a category context that does not contain it."""


class KindMismatch(DiagramValidationError):
    """A diagram kind does not match what a functor accepts."""


class LegCountMismatch(DiagramValidationError):
    """Two jellyfish heads do not both carry exactly n legs."""


class OddDimension(DiagramValidationError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"symplectic dimension must be even (got n={n})")


class ModeMismatch(DiagramValidationError):
    """Exact and floating tensors were mixed."""


class NotationError(DiagramValidationError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"parse error at position {position}: {reason}")


class SizeLimitExceeded(DiagramEngineError):
    def __init__(self, entries: int, cap: int, what: Optional[str] = None):
        self.entries = entries
        self.cap = cap
        label = f" for {what}" if what else ""
        super().__init__(f"{entries} matrix entries{label} exceed the cap of {cap}")
