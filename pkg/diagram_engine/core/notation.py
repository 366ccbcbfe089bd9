# notation.py - Parser dan formatter notasi teks diagram, contoh: P[2->2]: {1,3}/{2}/{4}
# Diagram (l+k)\n ditulis dengan akhiran \n setelah shape, contoh: P[2->2]\2: {1}/{2}/{3,4}
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import DiagramValidationError, NotationError
from .setpart import Diagram, DiagramShape, classify_bg, make_diagram

Term = Tuple[Fraction, Diagram]


class _Reader:
    """Cursor over the input text; whitespace between tokens is ignored."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, reason: str, position: Optional[int] = None) -> NotationError:
        return NotationError(self.text, self.pos if position is None else position, reason)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def expect(self, token: str) -> None:
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise self.fail(f"expected '{token}', found '{found}'")
        self.pos += len(token)

    def read_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.fail("expected a non-negative integer")
        return int(self.text[start:self.pos])

    def read_fraction(self) -> Fraction:
        self.skip_ws()
        start = self.pos
        negative = False
        if self.text.startswith("-", self.pos):
            negative = True
            self.pos += 1
        numerator = self.read_int()
        denominator = 1
        if self.peek() == "/":
            self.pos += 1
            denominator = self.read_int()
            if denominator == 0:
                raise self.fail("zero denominator in coefficient", start)
        value = Fraction(numerator, denominator)
        return -value if negative else value


def _read_shape(reader: _Reader) -> DiagramShape:
    reader.expect("[")
    k = reader.read_int()
    reader.expect("->")
    l = reader.read_int()
    reader.expect("]")
    return DiagramShape(k, l)


def _read_diagram(reader: _Reader) -> Diagram:
    start = reader.pos
    reader.expect("P")
    shape = _read_shape(reader)
    n = None
    if reader.peek() == "\\":
        reader.pos += 1
        n = reader.read_int()
    reader.expect(":")
    blocks: List[List[int]] = []
    if reader.peek() == "{":
        blocks.append(_read_block(reader))
        while reader.peek() == "/":
            reader.pos += 1
            blocks.append(_read_block(reader))
    try:
        diagram = make_diagram(shape, blocks)
        if n is not None:
            diagram = classify_bg(diagram, n)
    except DiagramValidationError as exc:
        raise reader.fail(str(exc), start) from exc
    return diagram


def _read_block(reader: _Reader) -> List[int]:
    reader.expect("{")
    members = [reader.read_int()]
    while reader.peek() == ",":
        reader.pos += 1
        members.append(reader.read_int())
    reader.expect("}")
    return members


def parse_diagram(text: str) -> Diagram:
    """
    Parse `P[k->l]: {..}/{..}` into a canonical Diagram.

    Raises:
        NotationError: with the character position and the reason; malformed
            block lists (overlaps, uncovered vertices) are reported the same way.
    """
    reader = _Reader(text)
    diagram = _read_diagram(reader)
    if not reader.at_end():
        raise reader.fail("unexpected trailing input")
    return diagram


def format_diagram(d: Diagram) -> str:
    tag = f"\\{d.n}" if d.is_brauer_grood else ""
    body = "/".join("{" + ",".join(str(v) for v in block) + "}" for block in d.blocks)
    head = f"P[{d.k}->{d.l}]{tag}:"
    return f"{head} {body}" if body else head


def parse_terms(text: str) -> Tuple[DiagramShape, List[Term]]:
    """
    Parse `c1 * <diagram> + c2 * <diagram> + ...` (coefficients `p/q`, default 1).

    The zero morphism is written `0[k->l]`.
    """
    reader = _Reader(text)
    terms: List[Term] = []
    shape: Optional[DiagramShape] = None
    while True:
        start = reader.pos
        if reader.peek() == "P":
            coefficient = Fraction(1)
        else:
            coefficient = reader.read_fraction()
            if reader.peek() == "[":
                if coefficient != 0 or terms:
                    raise reader.fail("shape marker is only allowed as the zero morphism 0[k->l]")
                shape = _read_shape(reader)
                if not reader.at_end():
                    raise reader.fail("unexpected trailing input")
                return shape, []
            reader.expect("*")
        diagram = _read_diagram(reader)
        if shape is None:
            shape = diagram.shape
        elif diagram.shape != shape:
            raise reader.fail(f"term shape {diagram.shape} differs from {shape}", start)
        terms.append((coefficient, diagram))
        if reader.at_end():
            return shape, terms
        reader.expect("+")


def format_terms(shape: DiagramShape, terms: Sequence[Term]) -> str:
    if not terms:
        return f"0[{shape.k}->{shape.l}]"
    return " + ".join(f"{coefficient} * {format_diagram(d)}" for coefficient, d in terms)
