"""Cells of ν(K) as two-row tables of chains, with boundaries and composition."""
from __future__ import annotations

from ..adc import j_dual
from ..chains import Chain, name_key
from ..report import Report

__all__ = ["Cell", "validate_cell", "source", "target", "iterated_source",
           "iterated_target", "identity", "pad", "is_identity", "compose",
           "compose_chain", "dual_cell", "lambda_counit"]


class Cell:
    """A ν-cell of dimension ``len(row0) - 1``.

    ``row0[k]`` and ``row1[k]`` are chains of degree ``k``.  ``complex`` is
    carried along for validation but ignored by equality and hashing.
    """

    __slots__ = ("row0", "row1", "complex", "_hash")

    def __init__(self, row0, row1, complex=None):
        self.row0 = tuple(row0)
        self.row1 = tuple(row1)
        if len(self.row0) != len(self.row1) or not self.row0:
            raise ValueError("cell rows must be nonempty and of equal length")
        for k, (a, b) in enumerate(zip(self.row0, self.row1)):
            if a.degree != k or b.degree != k:
                raise ValueError(f"entry {k} of a cell must have degree {k}")
        self.complex = complex
        self._hash = None

    @property
    def dim(self) -> int:
        return len(self.row0) - 1

    @property
    def top(self) -> Chain:
        return self.row0[-1]

    def entry(self, eps: int, k: int) -> Chain:
        return (self.row0, self.row1)[eps][k]

    def max_coefficient(self) -> int:
        return max(c.max_coefficient() for c in self.row0 + self.row1)

    def sort_key(self):
        return (self.dim,) + tuple(tuple((name_key(n), v) for n, v in c.items())
                                   for c in self.row0 + self.row1)

    def __eq__(self, other):
        if not isinstance(other, Cell):
            return NotImplemented
        return self.row0 == other.row0 and self.row1 == other.row1

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.row0, self.row1))
        return self._hash

    def __repr__(self):
        return f"Cell({self})"

    def __str__(self):
        top = ",".join(str(c) for c in self.row0)
        bottom = ",".join(str(c) for c in self.row1)
        return f"({top};{bottom})"

    def table(self) -> str:
        """Two-row matrix layout, columns aligned."""
        cols = [(str(a), str(b)) for a, b in zip(self.row0, self.row1)]
        widths = [max(len(a), len(b)) for a, b in cols]
        line0 = "  ".join(a.ljust(w) for (a, _), w in zip(cols, widths))
        line1 = "  ".join(b.ljust(w) for (_, b), w in zip(cols, widths))
        return f"⎛ {line0} ⎞\n⎝ {line1} ⎠"

    def to_json(self):
        return {"dim": self.dim, "row0": [c.to_json() for c in self.row0],
                "row1": [c.to_json() for c in self.row1]}

    @classmethod
    def from_json(cls, data, complex=None):
        try:
            rows = [[Chain.from_json(c, degree=k) for k, c in enumerate(data[key])]
                    for key in ("row0", "row1")]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed cell JSON: {exc}") from None
        cell = cls(rows[0], rows[1], complex)
        if "dim" in data and data["dim"] != cell.dim:
            raise ValueError(f"cell JSON says dim {data['dim']} but has {cell.dim + 1} columns")
        return cell

    def _with(self, row0, row1):
        return Cell(row0, row1, self.complex)


def validate_cell(c: Cell, K=None) -> Report:
    """Check positivity, boundary, augmentation and top-equality conditions."""
    K = K if K is not None else c.complex
    report = Report(title="cell")
    if K is None:
        raise ValueError("validate_cell needs the cell's complex")
    for eps, row in enumerate((c.row0, c.row1)):
        for k, x in enumerate(row):
            if not x.is_nonnegative():
                report.add("(a) positivity", f"row{eps}[{k}]", f"{x}")
            if k > K.max_degree and not x.is_zero():
                report.add("(a) positivity", f"row{eps}[{k}]", "nonzero above the top degree")
                continue
            try:
                K.check_chain(x)
            except ValueError as exc:
                report.add("basis", f"row{eps}[{k}]", str(exc))
                continue
            if k >= 1 and k <= K.max_degree:
                expected = c.row1[k - 1] - c.row0[k - 1]
                if K.boundary(x) != expected:
                    report.add("(b) boundary", f"row{eps}[{k}]",
                               f"d = {K.boundary(x)}, expected {expected}")
            elif k >= 1 and not (c.row1[k - 1] - c.row0[k - 1]).is_zero():
                report.add("(b) boundary", f"row{eps}[{k}]", "lower rows differ above the top degree")
        if c.row0 and K.max_degree >= 0:
            try:
                value = K.augment(row[0])
            except KeyError:
                value = None
            if value != 1:
                report.add("(c) augmentation", f"row{eps}[0]", f"ε = {value}")
        else:
            report.add("(c) augmentation", f"row{eps}[0]", "complex has no degree 0")
    if c.row0[-1] != c.row1[-1]:
        report.add("(d) top", f"degree {c.dim}", f"{c.row0[-1]} != {c.row1[-1]}")
    return report


def iterated_source(c: Cell, j: int) -> Cell:
    """``s_j``: the j-dimensional source; ``s_j(c) = c`` when ``j = dim``."""
    if not 0 <= j <= c.dim:
        raise ValueError(f"s_{j} undefined on a {c.dim}-cell")
    if j == c.dim:
        return c
    return c._with(c.row0[:j + 1], c.row1[:j] + (c.row0[j],))


def iterated_target(c: Cell, j: int) -> Cell:
    if not 0 <= j <= c.dim:
        raise ValueError(f"t_{j} undefined on a {c.dim}-cell")
    if j == c.dim:
        return c
    return c._with(c.row0[:j] + (c.row1[j],), c.row1[:j + 1])


def source(c: Cell) -> Cell:
    if c.dim == 0:
        raise ValueError("objects have no source")
    return iterated_source(c, c.dim - 1)


def target(c: Cell) -> Cell:
    if c.dim == 0:
        raise ValueError("objects have no target")
    return iterated_target(c, c.dim - 1)


def identity(c: Cell) -> Cell:
    zero = Chain.zero(c.dim + 1)
    return c._with(c.row0[:-1] + (c.top, zero), c.row1[:-1] + (c.top, zero))


def pad(c: Cell, dim: int) -> Cell:
    """Iterated identity of ``c`` in dimension ``dim``."""
    while c.dim < dim:
        c = identity(c)
    return c


def is_identity(c: Cell) -> bool:
    # a zero top forces the two rows to agree one degree down
    return c.dim >= 1 and c.top.is_zero()


def compose(j: int, x: Cell, y: Cell) -> Cell:
    """``x ∘_j y``: defined when ``s_j(x) = t_j(y)``; lower cells are padded."""
    dim = max(x.dim, y.dim)
    if not 0 <= j < dim:
        raise ValueError(f"∘_{j} undefined for cells of dimensions {x.dim}, {y.dim}")
    x, y = pad(x, dim), pad(y, dim)
    if iterated_source(x, j) != iterated_target(y, j):
        raise ValueError(f"cells are not ∘_{j}-composable: s_{j}(x) != t_{j}(y)")
    row0 = y.row0[:j + 1] + tuple(a + b for a, b in zip(x.row0[j + 1:], y.row0[j + 1:]))
    row1 = x.row1[:j + 1] + tuple(a + b for a, b in zip(x.row1[j + 1:], y.row1[j + 1:]))
    return Cell(row0, row1, x.complex if x.complex is not None else y.complex)


def compose_chain(*parts):
    """Left-to-right chained composition: ``compose_chain(a, j1, b, j2, c)`` is ``(a ∘_j1 b) ∘_j2 c``."""
    result = parts[0]
    for k in range(1, len(parts), 2):
        result = compose(parts[k], result, parts[k + 1])
    return result


def dual_cell(c: Cell, J=None, complex=None) -> Cell:
    """Transport ``c`` to the J-dual complex (``J=None``: all degrees).

    The row entry of degree ``k`` is swapped when ``k + 1`` is in ``J``, so
    sources and targets of ``j``-dimensional boundaries swap for ``j`` in ``J``.
    """
    if complex is None and c.complex is not None:
        complex = j_dual(c.complex, J)
    row0, row1 = list(c.row0), list(c.row1)
    for k in range(c.dim + 1):
        if J is None or (k + 1) in J:
            row0[k], row1[k] = row1[k], row0[k]
    return Cell(row0, row1, complex)


def lambda_counit(c: Cell) -> Chain:
    return c.top
