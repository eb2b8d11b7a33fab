"""Contractions of complexes, negligible cells and quasi-initial objects.

A contraction with center ``c0`` is a square-zero positive homotopy from the
constant morphism at ``c0`` to the identity.  A dual contraction goes the
other way.  ``dual=True`` selects the dual sign convention.
"""
from __future__ import annotations

from functools import lru_cache

from .adc import (AdcHomotopy, constant_morphism, identity_morphism,
                  validate_homotopy)
from .chains import Chain, format_name, parse_name
from .report import Report
from .simplicial import standard_simplex_adc
from .steiner.cells import (Cell, compose, identity, iterated_source,
                            iterated_target, pad, source, target, validate_cell)
from .steiner.truncation import GlobularData, globular_from_cells

__all__ = ["Contraction", "standard_contraction", "dual_contraction",
           "validate_contraction", "is_negligible", "connecting_cell",
           "QuasiInitialCertificate", "quasi_initial_certificate",
           "nu_morphism_cell", "nu_homotopy_cell", "validate_infty_contraction",
           "quasi_initial_brute", "quasi_final_brute"]


class Contraction:
    def __init__(self, complex, center: Chain, maps, dual: bool = False):
        self.complex = complex
        self.center = center
        self.maps = dict(maps)
        self.dual = dual

    def on_basis(self, degree, name) -> Chain:
        return self.maps.get((degree, name)) or Chain.zero(degree + 1)

    def __call__(self, x: Chain) -> Chain:
        out = Chain.zero(x.degree + 1)
        for name, coeff in x._coeffs.items():
            out = out + coeff * self.on_basis(x.degree, name)
        return out

    @property
    def sign(self) -> int:
        return -1 if self.dual else 1

    def as_homotopy(self) -> AdcHomotopy:
        """Standard: constant ⇒ identity.  Dual: identity ⇒ constant."""
        K = self.complex
        const = constant_morphism(K, K, self.center)
        ident = identity_morphism(K)
        start, end = (ident, const) if self.dual else (const, ident)
        return AdcHomotopy(start, end, self.maps)

    def to_json(self):
        return {"center": self.center.to_json(), "dual": self.dual,
                "h": {format_name(name): self.on_basis(p, name).to_json()
                      for p, name in self.complex.elements()
                      if not self.on_basis(p, name).is_zero()}}

    @classmethod
    def from_json(cls, data, complex):
        try:
            center = Chain.from_json(data["center"], degree=0)
            dual = bool(data.get("dual", False))
            raw = data.get("h", {})
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed contraction JSON: {exc}") from None
        degree_of = {name: p for p, name in complex.elements()}
        maps = {}
        for key, value in raw.items():
            name = parse_name(key)
            if name not in degree_of:
                raise ValueError(f"contraction names unknown basis element {key}")
            p = degree_of[name]
            maps[(p, name)] = Chain.from_json(value, degree=p + 1)
        return cls(complex, center, maps, dual)


def standard_contraction(n: int) -> Contraction:
    """h(i0..ip) = (0, i0..ip) when i0 > 0, else 0; center (0)."""
    K = standard_simplex_adc(n)
    maps = {(p, s): Chain.basis(p + 1, (0,) + s) for p, s in K.elements() if s[0] > 0}
    return Contraction(K, Chain.basis(0, (0,)), maps, dual=False)


def dual_contraction(n: int) -> Contraction:
    """h'(i0) = Σ_{i0<k<=n} (k-1,k); h'(i0 i1..ip) = Σ_{i0<k<i1} (k-1,k,i1..ip); center (n)."""
    K = standard_simplex_adc(n)
    maps = {}
    for p, s in K.elements():
        if p == 0:
            terms = {(k - 1, k): 1 for k in range(s[0] + 1, n + 1)}
        else:
            terms = {(k - 1, k) + s[1:]: 1 for k in range(s[0] + 1, s[1])}
        if terms:
            maps[(p, s)] = Chain(p + 1, terms)
    return Contraction(K, Chain.basis(0, (n,)), maps, dual=True)


def validate_contraction(c: Contraction) -> Report:
    """Check the augmentation, homotopy, positivity and square-zero identities."""
    K, h, sign = c.complex, c, c.sign
    report = Report(title="dual contraction" if c.dual else "contraction")
    c0 = c.center
    if c0.degree != 0:
        report.add("(✶-1)", "center", "center is not a 0-chain")
        return report
    if K.augment(c0) != 1:
        report.add("(✶-1)", "center", f"ε(c0) = {K.augment(c0)}")
    if not c0.is_nonnegative():
        report.add("(✶✶-1)", "center", f"c0 = {c0} is not positive")
    if not h(c0).is_zero():
        report.add("(✶✶✶-1)", "center", f"h0(c0) = {h(c0)}")
    for p, name in K.elements():
        where = format_name(name)
        x = Chain.basis(p, name)
        image = h.on_basis(p, name)
        if image.degree != p + 1:
            report.add("degree", where, "h changes degree by other than +1")
            continue
        if p + 1 > K.max_degree and not image.is_zero():
            report.add("degree", where, "h lands above the top degree")
            continue
        if not image.is_nonnegative():
            report.add(f"(✶✶{p})", where, f"h(x) = {image} is not positive")
        lhs = K.boundary(image) if p + 1 <= K.max_degree else Chain.zero(p)
        if p == 0:
            # standard: d h0 + c0 ε = 1 ; dual: -d h0 + c0 ε = 1
            total = sign * lhs + K.aug[name] * c0
            if total != x:
                report.add("(✶0)", where, f"gives {total}, expected {x}")
        else:
            total = sign * (lhs + h(K.diff[(p, name)]))
            if total != x:
                report.add(f"(✶{p})", where, f"gives {total}, expected {x}")
        if p + 1 <= K.max_degree and not h(image).is_zero():
            report.add(f"(✶✶✶{p})", where, f"h h(x) = {h(image)}")
    return report


def is_negligible(cell: Cell, c: Contraction) -> bool:
    return c(cell.top).is_zero()


def connecting_cell(x: Cell, y: Cell, c: Contraction) -> Cell:
    """The (i+1)-cell ``x → y`` (``y → x`` for a dual contraction) with top ``h(y_i)``."""
    if x.dim != y.dim:
        raise ValueError("connecting cells need cells of the same dimension")
    i = x.dim
    if i > 0 and (x.row0[:-1] != y.row0[:-1] or x.row1[:-1] != y.row1[:-1]):
        raise ValueError("connecting cells need parallel cells")
    if i == 0 and x.top != c.center:
        raise ValueError("an object must be the center to connect from it")
    if not is_negligible(x, c):
        raise ValueError("the first cell is not negligible")
    top = c(y.top)
    low, high = (y, x) if c.dual else (x, y)
    z = Cell(low.row0 + (top,), high.row1 + (top,), x.complex or c.complex)
    return z


class QuasiInitialCertificate:
    """Proof object: ``cell`` is quasi-initial (quasi-final if dual) among its parallels.

    The witness for a parallel ``y`` is the connecting cell, itself negligible,
    so the argument recurses one dimension up.  ``replay`` re-checks every
    witness over a finite set of cells.
    """

    def __init__(self, contraction: Contraction, cell: Cell):
        self.contraction = contraction
        self.cell = cell
        self.kind = "quasi-final" if contraction.dual else "quasi-initial"
        self.witnesses = {}

    def witness(self, y: Cell) -> Cell:
        if y not in self.witnesses:
            self.witnesses[y] = connecting_cell(self.cell, y, self.contraction)
        return self.witnesses[y]

    def replay(self, cells, depth: int = None) -> Report:
        """Check witnesses for every enumerated parallel, recursively up to ``depth`` levels."""
        report = Report(title=f"{self.kind} certificate")
        K = self.contraction.complex
        top_dim = max(c.dim for c in cells)
        depth = top_dim - self.cell.dim if depth is None else depth
        pending = [self.cell]
        for _ in range(depth):
            following = []
            for x in pending:
                for y in _parallels(cells, x):
                    z = connecting_cell(x, y, self.contraction)
                    low, high = (y, x) if self.contraction.dual else (x, y)
                    problems = validate_cell(z, K)
                    for v in problems:
                        report.add(v.condition, f"witness for {y}", v.detail)
                    if source(z) != low or target(z) != high:
                        report.add("boundary", f"witness for {y}", "wrong source or target")
                    if not is_negligible(z, self.contraction):
                        report.add("negligible", f"witness for {y}", "witness not negligible")
                    self.witnesses.setdefault((x, y), z)
                    following.append(z)
            pending = following
        return report

    def to_json(self):
        return {"kind": self.kind, "cell": self.cell.to_json(),
                "contraction": self.contraction.to_json(),
                "witnesses": [{"from": k[0].to_json(), "to": k[1].to_json(), "cell": z.to_json()}
                              for k, z in self.witnesses.items() if isinstance(k, tuple)]}


def _parallels(cells, x):
    return [y for y in cells if y.dim == x.dim
            and y.row0[:-1] == x.row0[:-1] and y.row1[:-1] == x.row1[:-1]]


def quasi_initial_certificate(c: Contraction, cell: Cell) -> QuasiInitialCertificate:
    problems = validate_contraction(c)
    if not problems.ok:
        raise ValueError(f"invalid contraction:\n{problems}")
    if cell.dim == 0 and cell.top != c.center:
        raise ValueError("only the center is a negligible object")
    if not is_negligible(cell, c):
        raise ValueError("the cell is not negligible")
    return QuasiInitialCertificate(c, cell)


# -- transformations induced by homotopies

def nu_morphism_cell(f, cell: Cell) -> Cell:
    """Apply an ADC morphism entrywise."""
    return Cell([f(x) for x in cell.row0], [f(x) for x in cell.row1], f.target)


def nu_homotopy_cell(f, g, h, cell: Cell) -> Cell:
    """The component at ``cell`` of the transformation ν(f) ⇒ ν(g) induced by ``h``.

    Row 0 is ``f x⁰_0, f x⁰_k + h x¹_{k-1}, ..., h x_i``; row 1 is
    ``g x¹_0, g x¹_k + h x⁰_{k-1}, ..., h x_i``.
    """
    i = cell.dim
    row0 = [f(cell.row0[0])]
    row1 = [g(cell.row1[0])]
    for k in range(1, i + 1):
        row0.append(f(cell.row0[k]) + h(cell.row1[k - 1]))
        row1.append(g(cell.row1[k]) + h(cell.row0[k - 1]))
    top = h(cell.top)
    return Cell(row0 + [top], row1 + [top], f.target)


def validate_infty_contraction(f, g, h, cells, center: Chain = None) -> Report:
    """Check the ∞-transformation laws of ν(h) on enumerated cells.

    (a) units go to units, (b) compatibility with every ∘_j, and, when a
    ``center`` is given, (c) the center goes to its identity and (d) the
    transformation is idempotent.  Each component is also validated and its
    boundary compared with the expected composite.
    """
    report = Report(title="∞-contraction")
    L = f.target
    alpha = {}

    def a(x):
        if x not in alpha:
            alpha[x] = nu_homotopy_cell(f, g, h, x)
        return alpha[x]

    F = lambda x: nu_morphism_cell(f, x)
    G = lambda x: nu_morphism_cell(g, x)
    cells = list(cells)
    for x in cells:
        ax = a(x)
        for v in validate_cell(ax, L):
            report.add("component", str(x), str(v))
        expected_src, expected_tgt = _component_boundary(x, a, F, G)
        if source(ax) != expected_src or target(ax) != expected_tgt:
            report.add("boundary", str(x), f"α(x) = {ax}")
        if a(identity(x)) != identity(ax):
            report.add("(a)", str(x), "α(1_x) != 1_α(x)")
        if center is not None:
            if a(ax) != identity(ax):
                report.add("(d)", str(x), f"α(α(x)) = {a(ax)}")
    if center is not None:
        c0 = Cell([center], [center], L)
        if a(c0) != identity(c0):
            report.add("(c)", str(c0), f"α(c0) = {a(c0)}")
    by_boundary = {}
    for y in cells:
        for j in range(y.dim):
            by_boundary.setdefault((j, y.dim, iterated_target(y, j)), []).append(y)
    for x in cells:
        for j in range(x.dim):
            for y in by_boundary.get((j, x.dim, iterated_source(x, j)), []):
                lhs = a(compose(j, x, y))
                rhs = _composite_law(j, x, y, a, F, G)
                if lhs != rhs:
                    report.add("(b)", f"{x} ∘_{j} {y}", f"{lhs} != {rhs}")
    return report


def _component_boundary(x, a, F, G):
    """Expected source and target of α(x)."""
    i = x.dim
    if i == 0:
        return F(x), G(x)
    src = F(x)
    for k in range(i):
        src = compose(k, a(iterated_target(x, k)), src)
    tgt = G(x)
    for k in range(i):
        tgt = compose(k, tgt, a(iterated_source(x, k)))
    return src, tgt


def _composite_law(j, x, y, a, F, G):
    """(B ∘_j α(y)) ∘_{j+1} (α(x) ∘_j A), lower indices binding first."""
    left = G(iterated_target(x, j + 1))
    for k in range(j):
        left = compose(k, left, a(iterated_source(x, k)))
    left = compose(j, left, a(y))
    right = F(iterated_source(y, j + 1))
    for k in range(j):
        right = compose(k, a(iterated_target(y, k)), right)
    right = compose(j, a(x), right)
    return compose(j + 1, left, right)


# -- brute-force oracle

def _as_globular(cells, n) -> GlobularData:
    if isinstance(cells, GlobularData):
        return cells
    if isinstance(cells, tuple) and len(cells) == 2 and isinstance(cells[1], bool):
        if cells[1]:
            raise ValueError("quasi-initial checks need a complete enumeration")
        cells = cells[0]
    return globular_from_cells(cells, n)


def _brute(cells, x, n, final):
    data = _as_globular(cells, n)
    dim_of = {}
    for d, level in enumerate(data.cells_by_dim):
        for c in level:
            dim_of[c] = d

    @lru_cache(maxsize=None)
    def check(z):
        d = dim_of[z]
        parallels = data.parallels(z, d)
        if d == n:
            return list(parallels) == [z]
        for y in parallels:
            arrows = data.hom(y, z) if final else data.hom(z, y)
            if not any(check(w) for w in arrows):
                return False
        return True

    return check(x)


def quasi_initial_brute(cells, x, n) -> bool:
    """Recursive definition checked over finite data of an n-category."""
    return _brute(cells, x, n, final=False)


def quasi_final_brute(cells, x, n) -> bool:
    return _brute(cells, x, n, final=True)
