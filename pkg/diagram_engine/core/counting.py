# counting.py - Tabel Stirling, Bell, Bell terbatas dan double factorial (integer presisi penuh)
from math import comb
from typing import Dict, List


class CountingTable:
    """
    Cached exact counts for the diagram families.

    Stirling rows are grown on demand with S2(m,t) = t*S2(m-1,t) + S2(m-1,t-1);
    Python ints keep every value exact.
    """

    def __init__(self):
        self._stirling_rows: List[List[int]] = [[1]]  # S2(0,0) = 1
        self._double_factorials: Dict[int, int] = {-1: 1, 0: 1}

    def _grow_to(self, m: int) -> None:
        while len(self._stirling_rows) <= m:
            prev = self._stirling_rows[-1]
            size = len(prev)
            row = [0] * (size + 1)
            for t in range(1, size + 1):
                carried = t * prev[t] if t < size else 0
                row[t] = carried + prev[t - 1]
            self._stirling_rows.append(row)

    def stirling2(self, m: int, t: int) -> int:
        if m < 0 or t < 0:
            raise ValueError(f"stirling2 needs non-negative arguments, got ({m}, {t})")
        if t > m:
            return 0
        self._grow_to(m)
        return self._stirling_rows[m][t]

    def bell(self, m: int) -> int:
        return self.bell_bounded(m, m)

    def bell_bounded(self, m: int, n: int) -> int:
        """Number of partitions of an m-set into at most n blocks."""
        if m < 0 or n < 0:
            raise ValueError(f"bell_bounded needs non-negative arguments, got ({m}, {n})")
        self._grow_to(m)
        row = self._stirling_rows[m]
        return sum(row[: min(n, m) + 1])

    def double_factorial(self, m: int) -> int:
        if m < -1:
            raise ValueError(f"double_factorial is defined for m >= -1, got {m}")
        if m not in self._double_factorials:
            self._double_factorials[m] = m * self.double_factorial(m - 2)
        return self._double_factorials[m]

    def brauer(self, m: int) -> int:
        """Perfect matchings of an m-set: (m-1)!! for even m, else 0."""
        return self.double_factorial(m - 1) if m % 2 == 0 else 0

    def brauer_grood(self, m: int, n: int) -> int:
        """Diagrams on m vertices with exactly n singletons and the rest paired."""
        if m < n or (m - n) % 2:
            return 0
        return comb(m, n) * self.double_factorial(m - n - 1)


_default_table = CountingTable()


def stirling2(m: int, t: int) -> int:
    return _default_table.stirling2(m, t)


def bell(m: int) -> int:
    return _default_table.bell(m)


def bell_bounded(m: int, n: int) -> int:
    return _default_table.bell_bounded(m, n)


def double_factorial(m: int) -> int:
    return _default_table.double_factorial(m)


def count_brauer(m: int) -> int:
    return _default_table.brauer(m)


def count_brauer_grood(m: int, n: int) -> int:
    return _default_table.brauer_grood(m, n)
