"""Augmented directed complexes with a distinguished basis.

Positivity is always generated by the basis, so a chain is positive exactly
when its coefficients are nonnegative.
"""
from __future__ import annotations

from .chains import Chain, format_name, name_key
from .report import Report

__all__ = ["Adc", "AdcMorphism", "AdcHomotopy", "validate_adc",
           "validate_morphism", "validate_homotopy", "j_dual", "is_decent",
           "constant_morphism", "identity_morphism", "compose_morphisms"]


class Adc:
    """A finite graded basis with a differential table and an augmentation.

    ``basis[p]`` lists the names in degree ``p``; ``diff[(p, name)]`` is a
    chain of degree ``p - 1`` and ``aug[name]`` an integer for ``p = 0``.
    """

    def __init__(self, basis, diff, aug, name=None, labels=None):
        self.basis = tuple(tuple(sorted(names, key=name_key)) for names in basis)
        self.diff = {}
        for (degree, bname), chain in diff.items():
            if degree < 1:
                raise ValueError("differential given in degree 0")
            if not isinstance(chain, Chain):
                chain = Chain(degree - 1, chain)
            self.diff[(degree, bname)] = chain
        for degree in range(1, len(self.basis)):
            for bname in self.basis[degree]:
                self.diff.setdefault((degree, bname), Chain.zero(degree - 1))
        self.aug = {bname: int(aug.get(bname, 0)) for bname in self.basis[0]} if self.basis else {}
        self.name = name
        self.labels = labels
        self._index = [frozenset(names) for names in self.basis]

    @property
    def max_degree(self) -> int:
        return len(self.basis) - 1

    def names(self, degree: int):
        if 0 <= degree < len(self.basis):
            return self.basis[degree]
        return ()

    def has(self, degree: int, bname) -> bool:
        return 0 <= degree < len(self._index) and bname in self._index[degree]

    def elements(self):
        for degree, names in enumerate(self.basis):
            for bname in names:
                yield degree, bname

    def basis_chain(self, degree, bname) -> Chain:
        return Chain.basis(degree, bname)

    def boundary(self, x: Chain) -> Chain:
        """Apply the differential to a chain of degree at least 1."""
        if x.degree < 1:
            raise ValueError("no differential out of degree 0")
        out = {}
        diff = self.diff
        for bname, coeff in x._coeffs.items():
            image = diff.get((x.degree, bname))
            if image is None:
                raise KeyError(f"unknown basis element {format_name(bname)} in degree {x.degree}")
            for target, value in image._coeffs.items():
                total = out.get(target, 0) + coeff * value
                if total:
                    out[target] = total
                else:
                    out.pop(target, None)
        return Chain._raw(x.degree - 1, out)

    def augment(self, x: Chain) -> int:
        if x.degree != 0:
            raise ValueError("augmentation is defined in degree 0")
        return sum(self.aug[bname] * coeff for bname, coeff in x._coeffs.items())

    def check_chain(self, x: Chain):
        for bname in x._coeffs:
            if not self.has(x.degree, bname):
                raise ValueError(f"{format_name(bname)} is not a basis element of degree {x.degree}")

    def __eq__(self, other):
        if not isinstance(other, Adc):
            return NotImplemented
        return (self.basis == other.basis and self.diff == other.diff
                and self.aug == other.aug)

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        label = self.name or "Adc"
        sizes = "/".join(str(len(names)) for names in self.basis)
        return f"<{label} basis sizes {sizes or 'empty'}>"


def validate_adc(K: Adc) -> Report:
    """Check ``d d = 0`` and ``ε d = 0`` on every basis element."""
    report = Report(title="adc")
    for (degree, bname), image in K.diff.items():
        if image.degree != degree - 1:
            report.add("degree", format_name(bname), "differential has the wrong degree")
            continue
        try:
            K.check_chain(image)
        except ValueError as exc:
            report.add("basis", format_name(bname), str(exc))
            continue
        if degree == 1:
            if K.augment(image) != 0:
                report.add("aug d = 0", format_name(bname), f"ε(d) = {K.augment(image)}")
        elif not K.boundary(image).is_zero():
            report.add("d d = 0", format_name(bname), f"d d = {K.boundary(image)}")
    return report


def is_decent(K: Adc) -> bool:
    return all(value >= 0 for value in K.aug.values())


def j_dual(K: Adc, J=None) -> Adc:
    """Negate the differential in the degrees listed in ``J`` (``None``: all)."""
    degrees = set(range(1, K.max_degree + 1)) if J is None else set(J)
    diff = {(p, b): (-c if p in degrees else c) for (p, b), c in K.diff.items()}
    tag = None
    if K.name:
        tag = f"{K.name}^op" if J is None else f"{K.name}^{sorted(degrees)}"
    return Adc(K.basis, diff, K.aug, name=tag, labels=K.labels)


class AdcMorphism:
    """Degreewise linear map given on basis elements; missing entries are 0."""

    def __init__(self, source: Adc, target: Adc, maps):
        self.source = source
        self.target = target
        self.maps = dict(maps)

    def on_basis(self, degree, bname) -> Chain:
        return self.maps.get((degree, bname)) or Chain.zero(degree)

    def __call__(self, x: Chain) -> Chain:
        out = Chain.zero(x.degree)
        for bname, coeff in x._coeffs.items():
            out = out + coeff * self.on_basis(x.degree, bname)
        return out

    def __eq__(self, other):
        if not isinstance(other, AdcMorphism):
            return NotImplemented
        keys = set(self.maps) | set(other.maps)
        return all(self.on_basis(*k) == other.on_basis(*k) for k in keys)

    __hash__ = None


class AdcHomotopy:
    """Maps ``(p, b)`` to a chain of degree ``p + 1`` of the target."""

    def __init__(self, start: AdcMorphism, end: AdcMorphism, maps):
        self.start = start
        self.end = end
        self.maps = dict(maps)

    @property
    def source(self):
        return self.start.source

    @property
    def target(self):
        return self.start.target

    def on_basis(self, degree, bname) -> Chain:
        return self.maps.get((degree, bname)) or Chain.zero(degree + 1)

    def __call__(self, x: Chain) -> Chain:
        out = Chain.zero(x.degree + 1)
        for bname, coeff in x._coeffs.items():
            out = out + coeff * self.on_basis(x.degree, bname)
        return out


def _image_ok(report, target, degree, image, where):
    if image.degree != degree:
        report.add("degree", where, f"image has degree {image.degree}, expected {degree}")
        return False
    if not image.is_nonnegative():
        report.add("positivity", where, f"image {image} has a negative coefficient")
    if degree > target.max_degree and not image.is_zero():
        report.add("degree", where, "nonzero image above the target's top degree")
        return False
    try:
        target.check_chain(image)
    except ValueError as exc:
        report.add("basis", where, str(exc))
        return False
    return True


def validate_morphism(f: AdcMorphism) -> Report:
    report = Report(title="morphism")
    K, L = f.source, f.target
    for degree, bname in K.elements():
        where = format_name(bname)
        image = f.on_basis(degree, bname)
        if not _image_ok(report, L, degree, image, where):
            continue
        if degree == 0:
            if L.augment(image) != K.aug[bname]:
                report.add("augmentation", where,
                           f"ε'(f(x)) = {L.augment(image)} but ε(x) = {K.aug[bname]}")
        else:
            lhs = L.boundary(image) if degree <= L.max_degree else Chain.zero(degree - 1)
            rhs = f(K.diff[(degree, bname)])
            if lhs != rhs:
                report.add("d f = f d", where, f"d f(x) = {lhs}, f d(x) = {rhs}")
    return report


def validate_homotopy(h: AdcHomotopy) -> Report:
    report = Report(title="homotopy")
    f, g = h.start, h.end
    if f.source is not g.source and f.source != g.source:
        report.add("shape", "morphisms", "different sources")
        return report
    K, L = f.source, f.target
    for degree, bname in K.elements():
        where = format_name(bname)
        image = h.on_basis(degree, bname)
        if not _image_ok(report, L, degree + 1, image, where):
            continue
        lhs = L.boundary(image) if not image.is_zero() else Chain.zero(degree)
        if degree > 0:
            lhs = lhs + h(K.diff[(degree, bname)])
        rhs = g.on_basis(degree, bname) - f.on_basis(degree, bname)
        if lhs != rhs:
            report.add("d h + h d = g - f", where, f"lhs {lhs}, rhs {rhs}")
    return report


def identity_morphism(K: Adc) -> AdcMorphism:
    return AdcMorphism(K, K, {(p, b): Chain.basis(p, b) for p, b in K.elements()})


def compose_morphisms(g: AdcMorphism, f: AdcMorphism) -> AdcMorphism:
    """``g ∘ f``."""
    maps = {(p, b): g(f.on_basis(p, b)) for p, b in f.source.elements()}
    return AdcMorphism(f.source, g.target, maps)


def constant_morphism(K: Adc, K2: Adc, c0: Chain) -> AdcMorphism:
    """The morphism sending ``x`` in degree 0 to ``ε(x) c0`` and killing the rest."""
    if not (is_decent(K) and is_decent(K2)):
        raise ValueError("constant morphisms need decent complexes")
    if c0.degree != 0 or not c0.is_nonnegative():
        raise ValueError("the constant value must be a nonnegative 0-chain")
    K2.check_chain(c0)
    if K2.augment(c0) != 1:
        raise ValueError(f"the constant value has augmentation {K2.augment(c0)}, not 1")
    maps = {(0, b): K.aug[b] * c0 for b in K.names(0)}
    return AdcMorphism(K, K2, maps)
