"""Chains: finitely supported integer combinations of basis elements.

A chain lives in a single degree.  Basis names are canonical tokens: integer
tuples for simplex bases, plain strings otherwise.  Chains are immutable and
hashable, and ``<=`` is the coefficientwise partial order.
"""
from __future__ import annotations

import re

__all__ = ["Chain", "add", "neg", "leq", "meet", "pos_neg_parts",
           "name_key", "format_name", "parse_name"]

_TUPLE_NAME = re.compile(r"^\(\s*-?\d+(\s*,\s*-?\d+)*\s*,?\s*\)$")


def name_key(name):
    """Sort key putting tuple names before string names."""
    if isinstance(name, tuple):
        return (0, name, "")
    return (1, (), str(name))


def format_name(name) -> str:
    if isinstance(name, tuple):
        return "(" + ",".join(str(i) for i in name) + ")"
    return str(name)


def parse_name(text):
    """Inverse of :func:`format_name`; ``"(0,1)"`` becomes ``(0, 1)``."""
    if isinstance(text, (list, tuple)):
        return tuple(int(i) for i in text)
    if isinstance(text, int):
        return (text,)
    text = str(text)
    if _TUPLE_NAME.match(text):
        inner = text.strip()[1:-1].strip().rstrip(",")
        return tuple(int(part) for part in inner.split(","))
    return text


class Chain:
    """An element of the free abelian group on the degree-``degree`` basis.

    >>> x = Chain(1, {(0, 1): 1, (1, 2): 1})
    >>> x + (-x)
    Chain(1, {})
    >>> sorted(x.support())
    [(0, 1), (1, 2)]
    """

    __slots__ = ("degree", "_coeffs", "_hash")

    def __init__(self, degree: int, coeffs=None):
        if degree < 0:
            raise ValueError("chain degree must be nonnegative")
        self.degree = degree
        items = {}
        for name, value in (coeffs or {}).items():
            value = int(value)
            if value:
                items[name] = items.get(name, 0) + value
        self._coeffs = {k: v for k, v in items.items() if v}
        self._hash = None

    @classmethod
    def zero(cls, degree: int) -> "Chain":
        return cls(degree)

    @classmethod
    def basis(cls, degree: int, name) -> "Chain":
        return cls(degree, {name: 1})

    @classmethod
    def _raw(cls, degree, coeffs):
        # coeffs already pruned
        obj = cls.__new__(cls)
        obj.degree = degree
        obj._coeffs = coeffs
        obj._hash = None
        return obj

    # -- mapping-like access
    def __getitem__(self, name) -> int:
        return self._coeffs.get(name, 0)

    def items(self):
        return sorted(self._coeffs.items(), key=lambda kv: name_key(kv[0]))

    def support(self):
        return [name for name, _ in self.items()]

    def __iter__(self):
        return iter(self.support())

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._coeffs.values())

    def max_coefficient(self) -> int:
        return max((abs(v) for v in self._coeffs.values()), default=0)

    def augmentation_sum(self) -> int:
        return sum(self._coeffs.values())

    # -- arithmetic
    def _check(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for name, value in other._coeffs.items():
            total = out.get(name, 0) + value
            if total:
                out[name] = total
            else:
                out.pop(name, None)
        return Chain._raw(self.degree, out)

    def __neg__(self):
        return Chain._raw(self.degree, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return Chain._raw(self.degree, {})
        return Chain._raw(self.degree, {k: v * scalar for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    # -- order
    def __le__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return leq(self, other)

    def __ge__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return leq(other, self)

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{name!r}: {value}" for name, value in self.items())
        return f"Chain({self.degree}, {{{body}}})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for name, value in self.items():
            label = format_name(name)
            if value == 1:
                term = label
            elif value == -1:
                term = "-" + label
            else:
                term = f"{value}{label}"
            parts.append(term)
        text = parts[0]
        for term in parts[1:]:
            text += term if term.startswith("-") else "+" + term
        return text

    # -- serialisation
    def to_json(self) -> dict:
        return {"degree": self.degree,
                "coeffs": {format_name(name): value for name, value in self.items()}}

    @classmethod
    def from_json(cls, data, degree=None) -> "Chain":
        if isinstance(data, dict) and "coeffs" in data:
            degree = data.get("degree", degree)
            coeffs = data["coeffs"]
        else:
            coeffs = data or {}
        if degree is None:
            raise ValueError("chain JSON without a degree")
        out = {}
        for key, value in coeffs.items():
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"coefficient of {key!r} is not an integer")
            out[parse_name(key)] = value
        return cls(int(degree), out)


def add(a: Chain, b: Chain) -> Chain:
    return a + b


def neg(a: Chain) -> Chain:
    return -a


def leq(a: Chain, b: Chain) -> bool:
    """True iff ``b - a`` has no negative coefficient."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return (b - a).is_nonnegative()


def meet(a: Chain, b: Chain) -> Chain:
    """Coefficientwise minimum of two nonnegative chains."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    if not (a.is_nonnegative() and b.is_nonnegative()):
        raise ValueError("meet is only defined on nonnegative chains")
    out = {}
    for name, value in a._coeffs.items():
        other = b._coeffs.get(name, 0)
        if other:
            out[name] = min(value, other)
    return Chain._raw(a.degree, out)


def pos_neg_parts(x: Chain):
    """Return ``(x_plus, x_minus)`` with ``x = x_plus - x_minus``.

    >>> pos_neg_parts(Chain(0, {(1,): 1, (0,): -1}))
    (Chain(0, {(1,): 1}), Chain(0, {(0,): 1}))
    """
    plus = {k: v for k, v in x._coeffs.items() if v > 0}
    minus = {k: -v for k, v in x._coeffs.items() if v < 0}
    return Chain._raw(x.degree, plus), Chain._raw(x.degree, minus)
