# union_find.py - Disjoint-set forest untuk menghitung komponen terhubung diagram bertumpuk
from collections import Counter, defaultdict
from typing import Dict, Hashable, Iterable, List


class UnionFind:
    """
    Disjoint sets with union by rank and path compression.

    Elements are created on first use, so callers only need to union the
    edges they know about and then call `groups` over the full vertex set.

    Examples
    --------
    >>> uf = UnionFind()
    >>> uf.union(1, 2)
    >>> uf.union(2, 3)
    >>> uf.find(3) == uf.find(1)
    True
    >>> uf.find(7)
    7
    """

    def __init__(self):
        self.parent: Dict[Hashable, Hashable] = {}
        self.rank: Counter = Counter()

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = x
            return x
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        # path compression
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        px = self.find(x)
        py = self.find(y)
        if px == py:
            return
        if self.rank[px] < self.rank[py]:
            px, py = py, px
        self.parent[py] = px
        if self.rank[px] == self.rank[py]:
            self.rank[px] += 1

    def union_all(self, items: Iterable) -> None:
        items = list(items)
        for other in items[1:]:
            self.union(items[0], other)

    def groups(self, elements: Iterable) -> List[List]:
        """Components of `elements`, each in input order, ordered by first element."""
        by_root: Dict[Hashable, List] = defaultdict(list)
        for e in elements:
            by_root[self.find(e)].append(e)
        return list(by_root.values())
