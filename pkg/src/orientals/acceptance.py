"""The acceptance criteria as plain functions.

Each ``criterion_N`` returns a :class:`Result`; ``run_all`` runs them in
order.  Both ``orientals selftest`` and the pytest suite use these.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

from .adc import j_dual, validate_adc
from .chains import Chain
from .contraction import (dual_contraction, quasi_final_brute,
                          quasi_initial_brute, quasi_initial_certificate,
                          standard_contraction, validate_contraction,
                          validate_infty_contraction)
from .homcat import (check_one_cells, compare_truncation2, merge,
                     one_cell_of_chain, split_cell, two_cell_witness,
                     two_cells_between)
from .simplicial import (Poset, chain_poset, nerve_simplices, oriental,
                         poset_oriental, standard_simplex_adc, xi)
from .steiner import (Cell, atom_face_formula, atom_table, check_category_laws,
                      check_loop_free, check_strongly_loop_free, check_unitary,
                      dual_cell, enumerate_cells, enumerate_hom, iterated_source,
                      iterated_target, validate_cell)

O2_GOLDEN = [
    "O_2",
    "dim 0",
    "  (0)",
    "  (1)",
    "  (2)",
    "dim 1",
    "  <(0,1)> = ((0),(0,1);(1),(0,1))",
    "  <(0,2)> = ((0),(0,2);(2),(0,2))",
    "  <(1,2)> = ((1),(1,2);(2),(1,2))",
    "dim 2",
    "  <(0,1,2)> = ((0),(0,2),(0,1,2);(2),(0,1)+(1,2),(0,1,2))",
]


@dataclass
class Result:
    number: int
    title: str
    passed: bool
    seconds: float
    limit: float = None
    details: list = field(default_factory=list)

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        budget = f" (limit {self.limit:g}s)" if self.limit else ""
        text = f"[{status}] criterion {self.number}: {self.title} in {self.seconds:.2f}s{budget}"
        if not self.passed and self.details:
            text += "\n" + "\n".join("    " + str(d) for d in self.details[:10])
        return text

    def to_json(self):
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "seconds": round(self.seconds, 3), "limit": self.limit,
                "details": [str(d) for d in self.details]}


def _timed(number, title, limit=None):
    def wrap(func):
        def run():
            start = time.perf_counter()
            details = []
            try:
                func(details)
            except Exception as exc:  # a crash is a failure, reported with its message
                details.append(f"{type(exc).__name__}: {exc}")
            seconds = time.perf_counter() - start
            if limit is not None and seconds >= limit:
                details.append(f"took {seconds:.2f}s, limit {limit}s")
            return Result(number, title, not details, seconds, limit, details)
        run.__name__ = func.__name__
        run.__doc__ = func.__doc__
        return run
    return wrap


def _obj(i, K):
    return Cell([Chain.basis(0, (i,))], [Chain.basis(0, (i,))], K)


@_timed(1, "O_2 display", limit=1.0)
def criterion_1(details):
    from .cli import main
    import contextlib
    import io
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        code = main(["oriental", "2"])
    lines = [line for line in buffer.getvalue().splitlines() if not line.startswith("    ")]
    if code != 0:
        details.append(f"exit code {code}")
    if lines != O2_GOLDEN:
        details.append("output differs:\n" + "\n".join(lines))


@_timed(2, "bases of ChnormΔ^n, n <= 6", limit=5.0)
def criterion_2(details):
    for n in range(7):
        K = standard_simplex_adc(n)
        for report in (validate_adc(K), check_unitary(K), check_strongly_loop_free(K),
                       check_loop_free(K)):
            if not report.ok:
                details.append(f"n={n}: {report}")


@_timed(3, "standard and dual contractions, n <= 6", limit=5.0)
def criterion_3(details):
    for n in range(7):
        for c in (standard_contraction(n), dual_contraction(n)):
            report = validate_contraction(c)
            if not report.ok:
                details.append(f"n={n}: {report}")


@_timed(4, "atoms against the face formula, n <= 5", limit=10.0)
def criterion_4(details):
    for n in range(6):
        K = standard_simplex_adc(n)
        for p, name in K.elements():
            table = atom_table(K, (p, name))
            for q in range(p + 1):
                for eps, row in enumerate((table.row0, table.row1)):
                    if row[q] != atom_face_formula(name, q, eps):
                        details.append(f"n={n} {name} q={q} ε={eps}")


@_timed(5, "∞-category laws on O_3", limit=60.0)
def criterion_5(details):
    cells, truncated = enumerate_cells(oriental(3), 3, 3)
    if truncated:
        details.append("enumeration truncated")
    report = check_category_laws(cells)
    details.extend(report)
    for law in ("unit", "globular", "associativity", "exchange"):
        if not report.instances.get(law):
            details.append(f"no instances of the {law} law")


@_timed(6, "duality on O_3")
def criterion_6(details):
    K = oriental(3)
    for J in (None, {1}, {2, 3}):
        K_dual = j_dual(K, J)
        cells = enumerate_cells(K, 3, 3).cells
        dual_cells = enumerate_cells(K_dual, 3, 3).cells
        image = [dual_cell(c, J, K_dual) for c in cells]
        if set(image) != set(dual_cells) or len(set(image)) != len(cells):
            details.append(f"J={J}: not a bijection")
        for c, d in zip(cells, image):
            if d.dim != c.dim or validate_cell(d, K_dual) or dual_cell(d, J, K) != c:
                details.append(f"J={J}: {c}")
            for j in range(c.dim):
                swap = J is None or (j + 1) in J
                s, t = iterated_source(d, j), iterated_target(d, j)
                want_s = dual_cell(iterated_target(c, j) if swap else iterated_source(c, j), J, K_dual)
                want_t = dual_cell(iterated_source(c, j) if swap else iterated_target(c, j), J, K_dual)
                if s != want_s or t != want_t:
                    details.append(f"J={J}: boundary {j} of {c}")


@_timed(7, "nerve of ChnormΔ^1")
def criterion_7(details):
    K = standard_simplex_adc(1)
    for n in range(5):
        found, truncated = nerve_simplices(K, n, 3)
        monotone = sum(1 for f in product((0, 1), repeat=n + 1)
                       if all(a <= b for a, b in zip(f, f[1:])))
        if truncated or len(found) != monotone or monotone != n + 2:
            details.append(f"n={n}: {len(found)} morphisms, {monotone} monotone maps")


def test_posets():
    """Posets with at most five elements used by the structural criteria."""
    return {
        "point": chain_poset(0),
        "chain2": chain_poset(1),
        "chain3": chain_poset(2),
        "chain4": chain_poset(3),
        "chain5": chain_poset(4),
        "antichain3": Poset(["a", "b", "c"]),
        "a<b, c": Poset(["a", "b", "c"], [("a", "b")]),
        "diamond": Poset(["0", "x", "y", "1"], [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")]),
        "diamond+top": Poset(["a", "b", "c", "d", "e"],
                             [("a", "b"), ("b", "c"), ("a", "d"), ("d", "c"), ("c", "e")]),
        "V+chain": Poset([0, 1, 2, 3, 4], [(0, 2), (1, 2), (2, 3), (3, 4)]),
    }


@_timed(8, "1-cells and 2-cells of poset orientals")
def criterion_8(details):
    for label, E in test_posets().items():
        K = poset_oriental(E)
        report = check_one_cells(E)
        details.extend(f"{label}: {v}" for v in report)
        chains = xi(E)
        for small, big in product(chains, repeat=2):
            if (small[0], small[-1]) != (big[0], big[-1]):
                continue
            witness = two_cell_witness(small, big, E, K)
            found, truncated = two_cells_between(small, big, E, K)
            found = [c for c in found if c.dim == 2]
            if truncated:
                details.append(f"{label}: search truncated for {small} -> {big}")
            if (witness is not None) != bool(found):
                details.append(f"{label}: {small} -> {big} witness/search disagree")
            if witness is not None and (validate_cell(witness, K) or witness not in found):
                details.append(f"{label}: bad witness {small} -> {big}")


@_timed(9, "2-truncation of O(E) and interval splitting")
def criterion_9(details):
    posets = test_posets()
    for label in ("point", "chain2", "chain3", "chain4", "chain5", "diamond+top", "V+chain"):
        report = compare_truncation2(posets[label])
        details.extend(f"{label}: {v}" for v in report)
    K = oriental(4)
    cuts = (0, 2, 4)
    a, b = one_cell_of_chain(cuts, K), one_cell_of_chain(range(5), K)
    cells, truncated = enumerate_hom(K, a, b, 1, 3)
    if truncated or not any(c.dim == 2 for c in cells) or not any(c.dim == 3 for c in cells):
        details.append("Hom(a, b) enumeration incomplete")
    for x in cells:
        factors = split_cell(x, cuts)
        if merge(factors) != x or split_cell(merge(factors), cuts) != factors:
            details.append(f"round trip fails on {x}")
        if any(validate_cell(f, K) for f in factors):
            details.append(f"invalid factor of {x}")


def theorem_cells(n):
    """The quasi-initial and quasi-final cells of O_n in dimensions 0, 1 and 2."""
    K = standard_simplex_adc(n)
    path = one_cell_of_chain(tuple(range(n + 1)), K)
    diagonal = one_cell_of_chain((0, n), K)
    initial, final = [_obj(0, K)], [_obj(n, K)]
    if n >= 1:
        initial.append(diagonal)
        final.append(path)
    if n >= 2:
        fan = Chain(2, {(0, k, k + 1): 1 for k in range(1, n)})
        cofan = Chain(2, {(k - 1, k, n): 1 for k in range(1, n)})
        for top, bucket in ((fan, initial), (cofan, final)):
            bucket.append(Cell(diagonal.row0 + (top,), path.row1 + (top,), K))
    return initial, final


@_timed(10, "∞-contraction and quasi-initial certificates", limit=120.0)
def criterion_10(details):
    c = standard_contraction(3)
    enumeration = enumerate_cells(c.complex, 3, 3)
    if enumeration.truncated:
        details.append("O_3 enumeration truncated")
    h = c.as_homotopy()
    details.extend(validate_infty_contraction(h.start, h.end, h, enumeration.cells, center=c.center))
    for n in range(5):
        std, dual = standard_contraction(n), dual_contraction(n)
        enumeration = enumerate_cells(std.complex, n, 3)
        if enumeration.truncated:
            details.append(f"O_{n} enumeration truncated")
        initial, final = theorem_cells(n)
        for cells, contraction, brute in ((initial, std, quasi_initial_brute),
                                          (final, dual, quasi_final_brute)):
            for x in cells:
                if validate_cell(x, std.complex):
                    details.append(f"n={n}: {x} is not a cell")
                    continue
                certificate = quasi_initial_certificate(contraction, x)
                replay = certificate.replay(enumeration.cells)
                if not replay.ok:
                    details.append(f"n={n}: replay failed for {x}: {replay}")
                if not brute(enumeration, x, n):
                    details.append(f"n={n}: brute force rejects {x} ({certificate.kind})")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def run_all():
    return [criterion() for criterion in CRITERIA]
