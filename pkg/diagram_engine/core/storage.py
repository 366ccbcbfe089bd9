# storage.py - Emisi dan parsing file matrix dan vektor
# Matrix: header "# functor=.. n=.. k=.. l=.. rows=.. cols=.." lalu baris dense atau triplet sparse
# Vektor: header "# n=.. order=.. mode=exact|float" lalu satu nilai per baris

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from .errors import NotationError, ShapeMismatch
from .operators import DenseOperator, TensorVector, VectorMode
from .setpart import DiagramShape

logger = logging.getLogger(__name__)

MATRIX_FORMATS = ("dense", "sparse")


def _format_value(x) -> str:
    # int64 dan Fraction dengan penyebut 1 keluar sebagai integer desimal
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else str(x)
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    return str(int(x))


def _parse_value(token: str, line: int, text: str):
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise NotationError(text, line, f"line {line}: cannot read number {token!r}") from None


def _parse_header(line: str, required: Tuple[str, ...], text: str) -> Dict[str, str]:
    if not line.startswith("#"):
        raise NotationError(text, 0, "missing '# ...' header line")
    fields = {}
    for token in line[1:].split():
        key, sep, value = token.partition("=")
        if not sep:
            raise NotationError(text, 0, f"header token {token!r} is not key=value")
        fields[key] = value
    missing = [key for key in required if key not in fields]
    if missing:
        raise NotationError(text, 0, f"header lacks {', '.join(missing)}")
    return fields


def _header_int(fields: Dict[str, str], key: str, text: str) -> int:
    try:
        return int(fields[key])
    except ValueError:
        raise NotationError(text, 0, f"header field {key}={fields[key]!r} is not an integer") from None


def format_matrix(M: DenseOperator, fmt: str = "dense") -> str:
    """
    Serialize a realized matrix.

    Args:
        M: Operator to emit
        fmt: "dense" (one row per line) or "sparse" (`row col value` for nonzero entries)
    """
    if fmt not in MATRIX_FORMATS:
        raise ValueError(f"unknown matrix format {fmt!r}, expected one of {MATRIX_FORMATS}")
    lines = [
        f"# functor={M.functor} n={M.n} k={M.shape.k} l={M.shape.l} rows={M.rows} cols={M.cols}"
    ]
    if fmt == "dense":
        for row in M.entries.tolist():
            lines.append(" ".join(_format_value(x) for x in row))
    else:
        for row, col in np.argwhere(M.entries != 0).tolist():
            lines.append(f"{row} {col} {_format_value(M.entries[row, col])}")
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, fmt: Optional[str] = None) -> DenseOperator:
    """
    Inverse of format_matrix.

    With fmt=None the layout is detected from the body: it is dense when there
    are exactly `rows` lines of `cols` values each, sparse otherwise.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise NotationError(text, 0, "empty matrix file")
    fields = _parse_header(lines[0], ("functor", "n", "k", "l", "rows", "cols"), text)
    n, k, l = (_header_int(fields, key, text) for key in ("n", "k", "l"))
    rows, cols = _header_int(fields, "rows", text), _header_int(fields, "cols", text)
    if (rows, cols) != (n**l, n**k):
        raise ShapeMismatch(f"header declares {rows}x{cols}, but n={n} k={k} l={l} gives {n**l}x{n**k}")

    body = [line.split() for line in lines[1:]]
    values: List[List] = [[0] * cols for _ in range(rows)]
    if fmt is None:
        dense = len(body) == rows and all(len(tokens) == cols for tokens in body)
    elif fmt in MATRIX_FORMATS:
        dense = fmt == "dense"
    else:
        raise ValueError(f"unknown matrix format {fmt!r}, expected one of {MATRIX_FORMATS}")
    for number, tokens in enumerate(body, start=1):
        if dense:
            if len(tokens) != cols:
                raise NotationError(text, number, f"line {number}: expected {cols} values, got {len(tokens)}")
            values[number - 1] = [_parse_value(t, number, text) for t in tokens]
            continue
        if len(tokens) != 3:
            raise NotationError(text, number, f"line {number}: expected `row col value`")
        row, col = _parse_value(tokens[0], number, text), _parse_value(tokens[1], number, text)
        if not (isinstance(row, int) and isinstance(col, int)):
            raise NotationError(text, number, f"line {number}: row and column must be integers")
        if not (0 <= row < rows and 0 <= col < cols):
            raise NotationError(text, number, f"line {number}: entry ({row},{col}) outside {rows}x{cols}")
        values[row][col] = _parse_value(tokens[2], number, text)

    logger.debug(f"parsed {rows}x{cols} matrix from a {'dense' if dense else 'sparse'} body")
    integral = all(isinstance(x, int) for row in values for x in row)
    entries = np.array(values, dtype=np.int64 if integral else object).reshape(rows, cols)
    return DenseOperator(DiagramShape(k, l), n, entries, fields["functor"])


def format_vector(v: TensorVector) -> str:
    lines = [f"# n={v.n} order={v.order} mode={v.mode.value}"]
    lines.extend(_format_value(x) for x in v.values.tolist())
    return "\n".join(lines) + "\n"


def parse_vector(text: str) -> TensorVector:
    """
    Read a vector file.

    Exact mode reads integers and `p/q` rationals; float mode reads decimals.

    Raises:
        NotationError: malformed header or value
        ShapeMismatch: value count differs from n^order
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise NotationError(text, 0, "empty vector file")
    fields = _parse_header(lines[0], ("n", "order", "mode"), text)
    n, order = _header_int(fields, "n", text), _header_int(fields, "order", text)
    try:
        mode = VectorMode(fields["mode"])
    except ValueError:
        raise NotationError(text, 0, f"unknown vector mode {fields['mode']!r}") from None
    body = lines[1:]
    if len(body) != n**order:
        raise ShapeMismatch(f"vector file has {len(body)} values, expected n^order = {n**order}")
    if mode == VectorMode.EXACT:
        return TensorVector.exact(n, order, [_parse_value(t, i, text) for i, t in enumerate(body, start=1)])
    try:
        return TensorVector.floating(n, order, [float(t) for t in body])
    except ValueError as exc:
        raise NotationError(text, 0, f"cannot read float value: {exc}") from None

