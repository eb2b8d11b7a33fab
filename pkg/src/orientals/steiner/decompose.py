"""Bounded search for an expression of a cell as a composite of atoms."""
from __future__ import annotations

from ..chains import Chain, format_name
from .atoms import atom_table
from .cells import Cell, compose, identity

__all__ = ["decompose_cell", "evaluate_expression"]


def _atom_expr(degree, name):
    return {"atom": format_name(name), "degree": degree}


def evaluate_expression(K, expr) -> Cell:
    """Rebuild the cell an expression tree denotes."""
    if "atom" in expr:
        from ..chains import parse_name
        return atom_table(K, Chain.basis(expr["degree"], parse_name(expr["atom"])))
    if expr.get("op") == "identity":
        return identity(evaluate_expression(K, expr["of"]))
    if expr.get("op") == "compose":
        return compose(expr["j"], evaluate_expression(K, expr["left"]),
                       evaluate_expression(K, expr["right"]))
    raise ValueError(f"unknown expression node {expr!r}")


def _with_identities(cell, expr, dim, table, cost, leaves):
    while cell.dim <= dim:
        if cell not in table:
            table[cell] = (expr, leaves)
            cost.setdefault(leaves, []).append(cell)
        cell = identity(cell)
        expr = {"op": "identity", "of": expr}


def decompose_cell(c: Cell, budget: int = 6, K=None):
    """Return an expression tree composing atoms into ``c``, or ``None``.

    Builds composites level by level, where the level counts atom
    occurrences, up to ``budget``.  Failure says nothing about
    decomposability beyond the budget.
    """
    K = K if K is not None else c.complex
    dim = c.dim
    table = {}
    by_cost = {}
    for degree, name in K.elements():
        if degree <= dim:
            cell = atom_table(K, Chain.basis(degree, name))
            _with_identities(cell, _atom_expr(degree, name), dim, table, by_cost, 1)
    if c in table:
        return table[c][0]
    for total in range(2, budget + 1):
        for left_cost in range(1, total):
            lefts = by_cost.get(left_cost, [])
            rights = by_cost.get(total - left_cost, [])
            for x in lefts:
                for y in rights:
                    if x.dim != y.dim:
                        continue
                    for j in range(x.dim):
                        try:
                            z = compose(j, x, y)
                        except ValueError:
                            continue
                        if z in table or not _fits(z, c):
                            continue
                        expr = {"op": "compose", "j": j,
                                "left": table[x][0], "right": table[y][0]}
                        _with_identities(z, expr, dim, table, by_cost, total)
                        if c in table:
                            return table[c][0]
    return None


def _fits(z: Cell, c: Cell) -> bool:
    # composites only add chains, so a factor's top sits below c's top
    if z.dim == c.dim:
        return z.top <= c.top
    return True
