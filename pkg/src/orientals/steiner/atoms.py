"""Atoms of a basis and the unitary / loop-free / strongly loop-free criteria."""
from __future__ import annotations

from itertools import combinations

import networkx as nx

from ..chains import Chain, format_name, meet, pos_neg_parts
from ..report import Report
from .cells import Cell

__all__ = ["atom", "atom_table", "atom_is_cell", "atom_face_formula",
           "check_unitary", "check_loop_free", "check_strongly_loop_free"]


def _as_chain(x, degree=None):
    if isinstance(x, Chain):
        return x
    if isinstance(x, tuple) and len(x) == 2 and isinstance(x[0], int) and degree is None \
            and not isinstance(x[1], int):
        return Chain.basis(x[0], x[1])
    if degree is None:
        if isinstance(x, tuple):
            degree = len(x) - 1
        else:
            raise ValueError("give a Chain, a (degree, name) pair or a simplex tuple")
    return Chain.basis(degree, x)


def atom_table(K, x) -> Cell:
    """The table ⟨x⟩: top entry ``x`` on both rows, then negative/positive parts of boundaries."""
    x = _as_chain(x)
    i = x.degree
    row0, row1 = [None] * (i + 1), [None] * (i + 1)
    row0[i] = row1[i] = x
    for k in range(i, 0, -1):
        row0[k - 1] = pos_neg_parts(K.boundary(row0[k]))[1]
        row1[k - 1] = pos_neg_parts(K.boundary(row1[k]))[0]
    return Cell(row0, row1, K)


def atom_is_cell(K, table: Cell) -> bool:
    return (table.top.is_nonnegative() and K.augment(table.row0[0]) == 1
            and K.augment(table.row1[0]) == 1)


def atom(K, x):
    """Return ``(table, is_cell)``."""
    table = atom_table(K, x)
    return table, atom_is_cell(K, table)


def atom_face_formula(x: tuple, q: int, eps: int) -> Chain:
    """Entry (q, eps) of the atom of a simplex, as a sum of iterated faces.

    Sums the composite face operators over strictly increasing index sequences
    ``k_1 < ... < k_{p-q}`` in ``[0, p]`` whose parities alternate with
    ``k_1`` even exactly when ``eps = 1``.  The face removing position
    ``k_{p-q}`` acts first.
    """
    p = len(x) - 1
    if not 0 <= q <= p:
        raise ValueError(f"q must lie in [0, {p}]")
    out = {}
    for seq in combinations(range(p + 1), p - q):
        if not all((k - idx) % 2 == (1 - eps) % 2 for idx, k in enumerate(seq)):
            continue
        face = x
        for k in reversed(seq):
            face = face[:k] + face[k + 1:]
        out[face] = out.get(face, 0) + 1
    return Chain(q, out)


def check_unitary(K) -> Report:
    report = Report(title="unitary")
    for degree, name in K.elements():
        table = atom_table(K, Chain.basis(degree, name))
        for eps, row in enumerate((table.row0, table.row1)):
            value = K.augment(row[0])
            if value != 1:
                report.add("unitary", format_name(name), f"ε(⟨b⟩^{eps}_0) = {value}")
    return report


def _cycle_report(graph, report, condition, label):
    for component in nx.strongly_connected_components(graph):
        if len(component) > 1:
            cycle = nx.find_cycle(graph.subgraph(component))
            path = " -> ".join(label(u) for u, _ in cycle) + " -> " + label(cycle[0][0])
            report.add(condition, label(sorted(component, key=repr)[0]), f"cycle {path}")
    return report


def _label(node):
    degree, name = node
    return f"{format_name(name)}[{degree}]"


def check_loop_free(K) -> Report:
    """For each i, the relation ⟨a⟩¹_i ∧ ⟨b⟩⁰_i > 0 on elements above degree i must be acyclic."""
    report = Report(title="loop-free")
    tables = {(p, b): atom_table(K, Chain.basis(p, b)) for p, b in K.elements()}
    for i in range(K.max_degree):
        nodes = [node for node in tables if node[0] > i]
        graph = nx.DiGraph()
        graph.add_nodes_from(nodes)
        for a in nodes:
            upper = tables[a].row1[i]
            for b in nodes:
                if a != b and not meet(upper, tables[b].row0[i]).is_zero():
                    graph.add_edge(a, b)
        _cycle_report(graph, report, f"R_{i}", _label)
    return report


def check_strongly_loop_free(K) -> Report:
    """Acyclicity of a ≤ (d b)⁻ (a below b) together with (d a)⁺ ≥ b (b below a)."""
    report = Report(title="strongly loop-free")
    graph = nx.DiGraph()
    graph.add_nodes_from(K.elements())
    for (degree, name) in K.elements():
        if degree == 0:
            continue
        plus, minus = pos_neg_parts(K.diff[(degree, name)])
        for lower in minus.support():
            graph.add_edge((degree - 1, lower), (degree, name))
        for lower in plus.support():
            graph.add_edge((degree, name), (degree - 1, lower))
    return _cycle_report(graph, report, "R_N", _label)
