"""Exhaustive checks of the strict ∞-category axioms on a finite set of cells."""
from __future__ import annotations

from collections import defaultdict

from ..report import Report
from .cells import compose, iterated_source, iterated_target, pad

__all__ = ["check_category_laws"]


def check_category_laws(cells, exchange: bool = True) -> Report:
    """Associativity, units, globular identities and (optionally) exchange.

    Every defined instance among same-dimensional ``cells`` is checked; the
    enumeration must contain the identities, which ``enumerate_cells`` does.
    The report carries ``instances``, a count per law.
    """
    report = Report(title="∞-category laws")
    counts = defaultdict(int)
    cells = list(cells)
    known = set(cells)
    by_target = defaultdict(list)
    for y in cells:
        for j in range(y.dim):
            by_target[(j, y.dim, iterated_target(y, j))].append(y)

    def partners(j, x):
        return by_target.get((j, x.dim, iterated_source(x, j)), [])

    composite = {}

    def comp(j, x, y):
        key = (j, x, y)
        if key not in composite:
            composite[key] = compose(j, x, y)
        return composite[key]

    for x in cells:
        for j in range(x.dim):
            left_unit = pad(iterated_target(x, j), x.dim)
            right_unit = pad(iterated_source(x, j), x.dim)
            counts["unit"] += 1
            if comp(j, left_unit, x) != x or comp(j, x, right_unit) != x:
                report.add("unit", str(x), f"∘_{j}")
            for y in partners(j, x):
                xy = comp(j, x, y)
                counts["globular"] += 1
                if xy not in known:
                    report.add("closure", f"{x} ∘_{j} {y}", "composite not enumerated")
                if iterated_source(xy, j) != iterated_source(y, j) or \
                        iterated_target(xy, j) != iterated_target(x, j):
                    report.add("globular", f"{x} ∘_{j} {y}", "s_j/t_j of the composite")
                for k in range(j + 1, x.dim):
                    for face, name in ((iterated_source, "s"), (iterated_target, "t")):
                        if face(xy, k) != compose(j, face(x, k), face(y, k)):
                            report.add("globular", f"{x} ∘_{j} {y}", f"{name}_{k} of the composite")
                for z in partners(j, y):
                    counts["associativity"] += 1
                    if comp(j, xy, z) != comp(j, x, comp(j, y, z)):
                        report.add("associativity", f"{x}, {y}, {z}", f"∘_{j}")
    if exchange:
        for x in cells:
            for j in range(x.dim):
                for y in partners(j, x):
                    for k in range(j + 1, x.dim):
                        for z in partners(k, x):
                            for w in partners(k, y):
                                if iterated_source(z, j) != iterated_target(w, j):
                                    continue
                                counts["exchange"] += 1
                                lhs = comp(k, comp(j, x, y), comp(j, z, w))
                                rhs = comp(j, comp(k, x, z), comp(k, y, w))
                                if lhs != rhs:
                                    report.add("exchange", f"{x}, {y}, {z}, {w}", f"j={j}, k={k}")
    report.instances = dict(counts)
    return report
