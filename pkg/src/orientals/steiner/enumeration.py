"""Exhaustive enumeration of ν-cells under a coefficient cap."""
from __future__ import annotations

import os
from collections import defaultdict
from typing import NamedTuple

from .._solver import systems_for
from ..chains import Chain
from .cells import Cell

__all__ = ["CellEnumeration", "enumerate_cells", "enumerate_hom", "default_cap"]


def default_cap() -> int:
    return int(os.environ.get("ORIENTALS_CAP", "3"))


class CellEnumeration(NamedTuple):
    """Unpacks as ``(cells, truncated)``."""

    cells: list
    truncated: bool

    def by_dim(self, dim: int):
        return [c for c in self.cells if c.dim == dim]

    @property
    def max_dim(self) -> int:
        return max((c.dim for c in self.cells), default=-1)


def _boundary_key(c: Cell):
    return c.row0[:-1], c.row1[:-1]


def _extend(K, cells, cap):
    """All (k+1)-cells whose source and target are among the k-cells ``cells``."""
    if not cells:
        return [], False
    k = cells[0].dim
    systems = systems_for(K)
    groups = defaultdict(list)
    for c in cells:
        groups[_boundary_key(c)].append(c)
    out = []
    truncated = False
    for group in groups.values():
        for s in group:
            for t in group:
                rhs = (t.top - s.top)._coeffs
                solutions, cut = systems.solve(k + 1, rhs, cap)
                truncated = truncated or cut
                for sol in solutions:
                    top = Chain(k + 1, sol)
                    out.append(Cell(s.row0 + (top,), t.row1 + (top,), K))
    out.sort(key=Cell.sort_key)
    return out, truncated


def _objects(K, cap):
    if K.max_degree < 0:
        return [], False
    solutions, cut = systems_for(K).solve(0, {"aug": 1}, cap)
    cells = [Cell([Chain(0, sol)], [Chain(0, sol)], K) for sol in solutions]
    cells.sort(key=Cell.sort_key)
    return cells, cut


def enumerate_cells(K, dim: int, cap: int = None) -> CellEnumeration:
    """Every cell of dimension ``<= dim`` with coefficients ``<= cap``.

    ``truncated`` is true iff the cap removed at least one cell (decided
    exactly when the relevant solution sets are bounded, conservatively
    otherwise).
    """
    cap = default_cap() if cap is None else cap
    level, truncated = _objects(K, cap)
    cells = list(level)
    for _ in range(dim):
        level, cut = _extend(K, level, cap)
        truncated = truncated or cut
        cells.extend(level)
    return CellEnumeration(cells, truncated)


def enumerate_hom(K, x: Cell, y: Cell, depth: int, cap: int = None) -> CellEnumeration:
    """Cells z with ``s_i z = x`` and ``t_i z = y`` for the parallel i-cells x, y.

    Returns the (i+1)-cells through the (i+1+depth)-cells, i.e. the
    ``0..depth`` cells of the Hom category.
    """
    cap = default_cap() if cap is None else cap
    if x.dim != y.dim or (x.dim > 0 and _boundary_key(x) != _boundary_key(y)):
        raise ValueError("Hom needs parallel cells")
    i = x.dim
    solutions, truncated = systems_for(K).solve(i + 1, (y.top - x.top)._coeffs, cap)
    level = sorted((Cell(x.row0 + (Chain(i + 1, s),), y.row1 + (Chain(i + 1, s),), K)
                    for s in solutions), key=Cell.sort_key)
    cells = list(level)
    for _ in range(depth):
        level, cut = _extend(K, level, cap)
        truncated = truncated or cut
        cells.extend(level)
    return CellEnumeration(cells, truncated)

