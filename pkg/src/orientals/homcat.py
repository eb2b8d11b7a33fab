"""Hom categories of poset orientals: 1-cells as chains, 2-cells as inclusions."""
from __future__ import annotations

from itertools import product

from .chains import Chain
from .report import Report
from .simplicial import Poset, poset_oriental, xi
from .steiner.atoms import atom_table
from .steiner.cells import Cell, compose, identity, source, target, validate_cell
from .steiner.enumeration import enumerate_cells, enumerate_hom
from .steiner.truncation import truncate_intelligent

__all__ = ["one_cell_of_chain", "one_cells_of_poset_oriental", "check_one_cells",
           "two_cell_witness", "two_cells_between", "restrict_hom_iso",
           "split_cell", "merge", "TwoCategory", "truncation2_of_poset_oriental",
           "compare_truncation2"]


def _path(chain):
    return Chain(1, {(a, b): 1 for a, b in zip(chain, chain[1:])})


def one_cell_of_chain(S, K=None) -> Cell:
    """The 1-cell min(S) → max(S) whose chain is the path through S (index tuple)."""
    S = tuple(S)
    low, high = Chain.basis(0, (S[0],)), Chain.basis(0, (S[-1],))
    return Cell([low, _path(S)], [high, _path(S)], K)


def one_cells_of_poset_oriental(E: Poset, K=None):
    """Pairs ``(S, cell)`` for every chain S of E, in canonical order."""
    K = K if K is not None else poset_oriental(E)
    return [(S, one_cell_of_chain(S, K)) for S in xi(E)]


def check_one_cells(E: Poset, cap: int = 3) -> Report:
    """Chains ↔ enumerated 1-cells, with min/max as boundaries and union as ∘₀."""
    K = poset_oriental(E)
    report = Report(title="1-cells of O(E)")
    cells, truncated = enumerate_cells(K, 1, cap)
    if truncated:
        report.add("enumeration", "dim 1", "truncated")
    enumerated = {c for c in cells if c.dim == 1}
    pairs = one_cells_of_poset_oriental(E, K)
    built = {cell for _, cell in pairs}
    if built != enumerated or len(built) != len(pairs):
        report.add("bijection", "dim 1", f"{len(pairs)} chains vs {len(enumerated)} cells")
    for S, cell in pairs:
        if source(cell).top != Chain.basis(0, (S[0],)) or target(cell).top != Chain.basis(0, (S[-1],)):
            report.add("boundary", S, "source/target are not min/max")
        if validate_cell(cell, K):
            report.add("valid", S, "not a cell")
    by_chain = dict(pairs)
    for (S1, c1), (S2, c2) in product(pairs, repeat=2):
        if S1[-1] == S2[0]:
            union = tuple(sorted(set(S1) | set(S2)))
            if compose(0, c2, c1) != by_chain[union]:
                report.add("union", f"{S1} then {S2}", "∘₀ is not the union")
    return report


def two_cell_witness(S_small, S_big, E: Poset, K=None):
    """A 2-cell from the 1-cell S' to S when S' ⊆ S, built by single insertions; else None."""
    S_small, S_big = tuple(S_small), tuple(S_big)
    if (S_small[0], S_small[-1]) != (S_big[0], S_big[-1]):
        raise ValueError("the 1-cells are not parallel")
    if not set(S_small) <= set(S_big):
        return None
    K = K if K is not None else poset_oriental(E)
    current = set(S_small)
    result = identity(one_cell_of_chain(S_small, K))
    for j in sorted(set(S_big) - set(S_small)):
        grown = sorted(current | {j})
        before = [e for e in grown if e < j]
        after = [e for e in grown if e > j]
        step = atom_table(K, Chain.basis(2, (before[-1], j, after[0])))
        step = compose(0, step, one_cell_of_chain(before, K))
        step = compose(0, one_cell_of_chain(after, K), step)
        result = compose(1, step, result)
        current.add(j)
    return result


def two_cells_between(S_small, S_big, E: Poset, K=None, cap: int = 3):
    """Exhaustive list of 2-cells S' → S, with the truncation flag."""
    K = K if K is not None else poset_oriental(E)
    return enumerate_hom(K, one_cell_of_chain(S_small, K), one_cell_of_chain(S_big, K), 0, cap)


def restrict_hom_iso(E: Poset, S, a: Cell, b: Cell, max_dim: int = None, cap: int = 3) -> Report:
    """Compare Hom(a, b) in O(S) and in O(E) for cells a, b supported on the chain S.

    The report carries ``counts = (sub, full)``.
    """
    S = tuple(S)
    sub = Poset([E.elements[i] for i in S], [(E.elements[x], E.elements[y])
                                             for x, y in zip(S, S[1:])])
    K_sub, K_full = poset_oriental(sub), poset_oriental(E)
    to_sub = {e: k for k, e in enumerate(S)}
    max_dim = len(S) if max_dim is None else max_dim
    depth = max_dim - a.dim - 1
    report = Report(title="Hom restriction")

    def rename(cell, mapping, K):
        conv = lambda c: Chain(c.degree, {tuple(mapping[v] for v in n): k
                                          for n, k in c.items()})
        return Cell([conv(c) for c in cell.row0], [conv(c) for c in cell.row1], K)

    try:
        a_sub, b_sub = rename(a, to_sub, K_sub), rename(b, to_sub, K_sub)
    except KeyError:
        raise ValueError("the cells are not supported on S") from None
    small = enumerate_hom(K_sub, a_sub, b_sub, depth, cap)
    large = enumerate_hom(K_full, a, b, depth, cap)
    if small.truncated or large.truncated:
        report.add("enumeration", "Hom", "truncated")
    image = {rename(c, dict(enumerate(S)), K_full) for c in small.cells}
    if len(image) != len(small.cells):
        report.add("injective", "Hom", "inclusion identifies cells")
    if image != set(large.cells):
        report.add("bijection", "Hom", f"{len(small.cells)} vs {len(large.cells)} cells")
    report.counts = (len(small.cells), len(large.cells))
    return report


def _interval(chain, low, high):
    return Chain(chain.degree, {n: k for n, k in chain.items() if low <= n[0] and n[-1] <= high})


def split_cell(x: Cell, cuts):
    """Cut a Hom cell along the vertices ``cuts`` into horizontally composable factors."""
    cuts = tuple(cuts)
    if x.dim < 1 or len(cuts) < 2 or list(cuts) != sorted(set(cuts)):
        raise ValueError("need a cell of positive dimension and increasing cuts")
    lo, hi = cuts[0], cuts[-1]
    expected_src = Chain(1, {(a, b): 1 for a, b in zip(cuts, cuts[1:])})
    if (x.row0[0] != Chain.basis(0, (lo,)) or x.row1[0] != Chain.basis(0, (hi,))
            or x.row0[1] != expected_src or x.row1[1] != _path(tuple(range(lo, hi + 1)))):
        raise ValueError("the cell does not go from the cut path to the unit path")
    factors = []
    for a, b in zip(cuts, cuts[1:]):
        row0 = [Chain.basis(0, (a,)), Chain.basis(1, (a, b))]
        row1 = [Chain.basis(0, (b,)), _path(tuple(range(a, b + 1)))]
        for p in range(2, x.dim + 1):
            row0.append(_interval(x.row0[p], a, b))
            row1.append(_interval(x.row1[p], a, b))
        factors.append(Cell(row0, row1, x.complex))
    return factors


def merge(factors) -> Cell:
    """Horizontal composite of factors listed from the leftmost interval."""
    result = factors[0]
    for factor in factors[1:]:
        result = compose(0, factor, result)
    return result


class TwoCategory:
    """The 2-truncation of O(E): Hom(a, b) is the inclusion order on chains from a to b."""

    def __init__(self, E: Poset):
        self.poset = E
        self.objects = list(range(len(E)))
        self.homs = {}
        for S in xi(E):
            self.homs.setdefault((S[0], S[-1]), []).append(S)

    def hom(self, a, b):
        return self.homs.get((a, b), [])

    def two_cells(self):
        """Pairs (S', S) with S' ⊆ S parallel."""
        return [(s, t) for chains in self.homs.values() for s in chains for t in chains
                if set(s) <= set(t)]

    @staticmethod
    def compose(first, second):
        """``second ∘₀ first`` on chains is their union."""
        if first[-1] != second[0]:
            raise ValueError("chains are not composable")
        return tuple(sorted(set(first) | set(second)))

    def to_json(self):
        name = lambda S: [self.poset.elements[i] for i in S]
        homs = []
        for (a, b), chains in sorted(self.homs.items()):
            homs.append({"from": self.poset.elements[a], "to": self.poset.elements[b],
                         "objects": [name(S) for S in chains],
                         "order": [[name(s), name(t)] for s in chains for t in chains
                                   if s != t and set(s) <= set(t)]})
        chains = xi(self.poset)
        composition = [{"first": name(s), "second": name(t), "result": name(self.compose(s, t))}
                       for s in chains for t in chains if s[-1] == t[0]]
        return {"objects": list(self.poset.elements), "homs": homs,
                "composition": composition}


def truncation2_of_poset_oriental(E: Poset) -> TwoCategory:
    return TwoCategory(E)


def compare_truncation2(E: Poset, cap: int = 3) -> Report:
    """Check that τ₂ of the enumerated oriental matches :class:`TwoCategory`."""
    report = Report(title="τ₂ of O(E)")
    K = poset_oriental(E)
    enumeration = enumerate_cells(K, 3, cap)
    if enumeration.truncated:
        report.add("enumeration", "dim 3", "truncated")
        return report
    tau = truncate_intelligent(enumeration, 2)
    direct = TwoCategory(E)
    objects = {c.top.support()[0][0] for c in tau.lower[0]}
    if objects != set(direct.objects) or len(tau.lower[0]) != len(direct.objects):
        report.add("objects", "dim 0", "object sets differ")
    chain_of = {}
    for S in xi(E):
        chain_of[one_cell_of_chain(S, K)] = S
    if set(chain_of) != set(tau.lower[1]):
        report.add("1-cells", "dim 1", f"{len(chain_of)} chains vs {len(tau.lower[1])} cells")
        return report
    pair_of = {}
    for index in range(len(tau.classes)):
        pair = (chain_of[tau.class_source(index)], chain_of[tau.class_target(index)])
        if pair in pair_of.values():
            report.add("thin", pair, "two classes with the same boundary")
        pair_of[index] = pair
    if set(pair_of.values()) != set(direct.two_cells()):
        report.add("2-cells", "dim 2", "boundary pairs differ from inclusions")
    index_of = {pair: index for index, pair in pair_of.items()}
    for x, y in product(range(len(tau.classes)), repeat=2):
        (xs, xt), (ys, yt) = pair_of[x], pair_of[y]
        if xs == yt:
            got = pair_of[tau.compose(1, x, y)]
            if got != (ys, xt):
                report.add("∘₁", (x, y), f"{got} != {(ys, xt)}")
        if xs[0] == yt[-1]:
            got = pair_of[tau.compose(0, x, y)]
            want = (direct.compose(ys, xs), direct.compose(yt, xt))
            if got != want:
                report.add("∘₀", (x, y), f"{got} != {want}")
    if not tau.is_well_defined():
        report.add("well-defined", "τ₂", "composition depends on representatives")
    report.index_of = index_of
    return report
