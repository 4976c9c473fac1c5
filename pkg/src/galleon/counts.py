"""Memoized tables of exact counts indexed by (leaves, galls).

Both enumeration recursions share the same access pattern: every cell
(n, g) depends only on cells with strictly fewer leaves, so tables are
filled bottom-up in n.  Cells are immutable once written; construction is
sequential, reads afterwards are safe from any thread.

A cell (n, g) is a structural zero whenever g > floor((n-1)/2): a gall
consumes at least three leaf-bearing positions, so each extra gall needs
two more leaves.
"""

from __future__ import annotations


def max_galls(n: int) -> int:
    """Largest gall count a shape on n leaves can support."""
    return max(0, (n - 1) // 2)


class CountTable:
    """Base table: memoized map (n >= 1, g >= 0) -> exact count.

    Subclasses provide ``kind`` and ``_compute(n, g)``; the base class owns
    the fill order and the structural-zero rule.  ``_comp_memo`` caches the
    inner composition sums shared between cells.
    """

    kind = "abstract"

    def __init__(self):
        self.cells = {(1, 0): 1}
        self._comp_memo = {}

    def cell(self, n: int, g: int):
        """Value of an already computed cell (structural zeros included)."""
        if g < 0 or g > max_galls(n):
            return 0
        return self.cells[(n, g)]

    def get(self, n: int, g: int):
        """Count for (n, g), filling every smaller row first."""
        if n < 1:
            raise ValueError("leaf count must be at least 1, got %d" % n)
        if g < 0:
            raise ValueError("gall count must be nonnegative, got %d" % g)
        if g > max_galls(n):
            return 0
        if (n, g) not in self.cells:
            for m in range(2, n + 1):
                for h in range(min(g, max_galls(m)) + 1):
                    if (m, h) not in self.cells:
                        self.cells[(m, h)] = self._compute(m, h)
        return self.cells[(n, g)]

    def row_total(self, n: int):
        """Sum over all gall counts for a fixed number of leaves."""
        return sum(self.get(n, g) for g in range(max_galls(n) + 1))

    def _compute(self, n, g):
        raise NotImplementedError
