"""Finite globular data and the intelligent truncation τ_n."""
from __future__ import annotations

from collections import defaultdict

from networkx.utils import UnionFind

from .cells import compose, source, target

__all__ = ["GlobularData", "Truncation", "truncate_intelligent", "globular_from_cells"]


class GlobularData:
    """Cells of an n-category by dimension, with source/target lookups.

    Cells are arbitrary hashable tokens; ``src``/``tgt`` map each cell of
    positive dimension to a cell one dimension lower.
    """

    def __init__(self, n, cells_by_dim, src, tgt):
        self.n = n
        self.cells_by_dim = [list(level) for level in cells_by_dim]
        self.src = dict(src)
        self.tgt = dict(tgt)
        self._hom = defaultdict(list)
        for level in self.cells_by_dim[1:]:
            for z in level:
                self._hom[(self.src[z], self.tgt[z])].append(z)

    def dim_of(self, cell):
        for d, level in enumerate(self.cells_by_dim):
            if cell in level:
                return d
        raise KeyError(cell)

    def hom(self, x, y):
        return self._hom.get((x, y), [])

    def parallels(self, x, dim):
        if dim == 0:
            return self.cells_by_dim[0]
        return self.hom(self.src[x], self.tgt[x])


def globular_from_cells(cells, n, offset: int = 0) -> GlobularData:
    """Globular data of enumerated ν-cells of dimension ``offset .. offset + n``.

    With ``offset = i + 1`` this re-indexes the cells of a Hom category
    between parallel i-cells, whose (i+1+j)-cells become j-cells.
    """
    by_dim = [[] for _ in range(n + 1)]
    src, tgt = {}, {}
    for c in cells:
        level = c.dim - offset
        if 0 <= level <= n:
            by_dim[level].append(c)
            if level > 0:
                src[c], tgt[c] = source(c), target(c)
    return GlobularData(n, by_dim, src, tgt)


class Truncation:
    """τ_n of enumerated cells: n-cells up to zigzags of (n+1)-cells."""

    def __init__(self, n, lower, classes, class_of):
        self.n = n
        self.lower = lower
        self.classes = classes
        self.class_of = class_of

    def representative(self, index):
        return self.classes[index][0]

    def class_source(self, index):
        return source(self.representative(index)) if self.n > 0 else None

    def class_target(self, index):
        return target(self.representative(index)) if self.n > 0 else None

    def compose(self, j, first, second):
        """Class of the composite of representatives (``first ∘_j second``)."""
        return self.class_of[compose(j, self.representative(first), self.representative(second))]

    def is_well_defined(self) -> bool:
        """Composition of classes does not depend on representatives."""
        for j in range(self.n):
            for a, xs in enumerate(self.classes):
                for b, ys in enumerate(self.classes):
                    results = set()
                    for x in xs:
                        for y in ys:
                            try:
                                results.add(self.class_of[compose(j, x, y)])
                            except ValueError:
                                pass
                    if len(results) > 1:
                        return False
        return True

    def as_globular(self) -> GlobularData:
        by_dim = [list(level) for level in self.lower] + [list(range(len(self.classes)))]
        src, tgt = {}, {}
        for level in self.lower[1:]:
            for c in level:
                src[c], tgt[c] = source(c), target(c)
        if self.n > 0:
            for index in range(len(self.classes)):
                src[index] = self.class_source(index)
                tgt[index] = self.class_target(index)
        return GlobularData(self.n, by_dim, src, tgt)


def truncate_intelligent(enumeration, n) -> Truncation:
    """Merge n-cells joined by an (n+1)-cell and keep lower cells as they are."""
    cells, truncated = enumeration
    if truncated:
        raise ValueError("τ_n needs a complete enumeration (truncated=True)")
    top = max((c.dim for c in cells), default=-1)
    if top < n + 1 and any(c.dim == n for c in cells):
        raise ValueError(f"τ_{n} needs cells up to dimension {n + 1}")
    lower = [[c for c in cells if c.dim == d] for d in range(n)]
    level = [c for c in cells if c.dim == n]
    uf = UnionFind(level)
    for z in cells:
        if z.dim == n + 1:
            uf.union(source(z), target(z))
    groups = defaultdict(list)
    for c in level:
        groups[uf[c]].append(c)
    classes = sorted((sorted(g, key=lambda c: c.sort_key()) for g in groups.values()),
                     key=lambda g: g[0].sort_key())
    class_of = {c: index for index, g in enumerate(classes) for c in g}
    return Truncation(n, lower, classes, class_of)
