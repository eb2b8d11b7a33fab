"""Posets, simplicial complexes and their normalized-chain complexes."""
from __future__ import annotations

from itertools import combinations
from math import comb

from .adc import Adc, AdcMorphism
from .chains import Chain

__all__ = ["Poset", "SimplicialComplex", "chnorm_of_complex",
           "standard_simplex_adc", "oriental", "xi", "base_order_preccurlyeq",
           "count_kappa_simplices", "nerve_simplices", "poset_oriental",
           "chain_poset"]


class Poset:
    """A finite poset.

    ``leq`` may be any generating set of pairs; the reflexive-transitive
    closure is taken and antisymmetry checked.  Elements are re-indexed along
    a linear extension (the input order when it already is one), and the
    index is what simplex tuples use.
    """

    def __init__(self, elements, leq=()):
        elements = list(elements)
        if len(set(map(_hashable, elements))) != len(elements):
            raise ValueError("repeated poset element")
        pos = {_hashable(e): i for i, e in enumerate(elements)}
        size = len(elements)
        above = [{i} for i in range(size)]
        for pair in leq:
            if len(pair) != 2:
                raise ValueError(f"leq entry {pair!r} is not a pair")
            a, b = pair
            try:
                above[pos[_hashable(a)]].add(pos[_hashable(b)])
            except KeyError as exc:
                raise ValueError(f"unknown element {exc.args[0]!r} in leq") from None
        changed = True
        while changed:
            changed = False
            for i in range(size):
                grown = set().union(*(above[j] for j in above[i]))
                if len(grown) > len(above[i]):
                    above[i] = grown
                    changed = True
        for i in range(size):
            for j in above[i]:
                if i != j and i in above[j]:
                    raise ValueError(f"leq is not antisymmetric on {elements[i]!r}, {elements[j]!r}")
        order = _linear_extension(size, above)
        self.elements = [elements[i] for i in order]
        new_index = {old: new for new, old in enumerate(order)}
        self._above = [frozenset(new_index[j] for j in above[old]) for old in order]
        self.input_order_kept = order == list(range(size))
        self._pos = {_hashable(e): i for i, e in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def index(self, element) -> int:
        return self._pos[_hashable(element)]

    def le(self, i: int, j: int) -> bool:
        """Order on indices."""
        return j in self._above[i]

    def lt(self, i: int, j: int) -> bool:
        return i != j and j in self._above[i]

    def comparable(self, i, j) -> bool:
        return self.le(i, j) or self.le(j, i)

    def is_chain(self, indices) -> bool:
        ordered = sorted(indices)
        return all(self.le(a, b) for a, b in zip(ordered, ordered[1:]))

    def relation_pairs(self):
        return [(self.elements[i], self.elements[j])
                for i in range(len(self)) for j in sorted(self._above[i]) if i != j]

    def to_json(self):
        return {"elements": list(self.elements),
                "leq": [list(pair) for pair in self.relation_pairs()]}


def _hashable(token):
    return tuple(token) if isinstance(token, list) else token


def _linear_extension(size, above):
    remaining = list(range(size))
    order = []
    while remaining:
        for i in remaining:
            # i is minimal among the rest if nothing left is strictly below it
            if not any(j != i and i in above[j] for j in remaining):
                order.append(i)
                remaining.remove(i)
                break
    return order


def chain_poset(n: int) -> Poset:
    """The total order 0 < 1 < ... < n."""
    return Poset(range(n + 1), [(i, i + 1) for i in range(n)])


def xi(E: Poset):
    """All nonempty chains of ``E`` as index tuples, sorted by size then lexicographically."""
    found = []

    def grow(current):
        found.append(tuple(current))
        for j in range(current[-1] + 1, len(E)):
            if E.le(current[-1], j):
                current.append(j)
                grow(current)
                current.pop()

    for start in range(len(E)):
        grow([start])
    return sorted(found, key=lambda s: (len(s), s))


class SimplicialComplex:
    """A poset together with a down-closed family of chains.

    ``faces=None`` means every chain is a face.
    """

    def __init__(self, poset: Poset, faces=None):
        self.poset = poset
        if faces is None:
            chosen = set(xi(poset))
        else:
            chosen = set()
            for face in faces:
                indices = tuple(sorted(poset.index(e) for e in face))
                if not indices or len(set(indices)) != len(indices):
                    raise ValueError(f"face {face!r} is empty or repeats an element")
                if not poset.is_chain(indices):
                    raise ValueError(f"face {face!r} is not totally ordered")
                chosen.add(indices)
            for i in range(len(poset)):
                if (i,) not in chosen:
                    raise ValueError(f"singleton {poset.elements[i]!r} is not a face")
            for face in chosen:
                for size in range(1, len(face)):
                    for sub in combinations(face, size):
                        if sub not in chosen:
                            raise ValueError(f"faces are not closed under subsets: missing {sub}")
        self.faces = sorted(chosen, key=lambda s: (len(s), s))

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or "elements" not in data:
            raise ValueError("complex JSON needs an 'elements' list")
        poset = Poset(data["elements"], data.get("leq", []))
        return cls(poset, data.get("faces"))

    def to_json(self):
        out = self.poset.to_json()
        out["faces"] = [[self.poset.elements[i] for i in face] for face in self.faces]
        return out


def chnorm_of_complex(C: SimplicialComplex, name=None) -> Adc:
    """Normalized chains: one basis element per face, alternating-sum differential."""
    top = max((len(face) for face in C.faces), default=0)
    basis = [[face for face in C.faces if len(face) == p + 1] for p in range(top)]
    diff = {}
    for p in range(1, top):
        for face in basis[p]:
            diff[(p, face)] = Chain(p - 1, {face[:k] + face[k + 1:]: (-1) ** k
                                            for k in range(p + 1)})
    aug = {face: 1 for face in basis[0]} if basis else {}
    return Adc(basis, diff, aug, name=name, labels=list(C.poset.elements))


def standard_simplex_adc(n: int) -> Adc:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return chnorm_of_complex(SimplicialComplex(chain_poset(n)), name=f"ChnormΔ^{n}")


def oriental(n: int) -> Adc:
    K = standard_simplex_adc(n)
    K.name = f"O_{n}"
    return K


def poset_oriental(E: Poset) -> Adc:
    return chnorm_of_complex(SimplicialComplex(E), name="O(E)")


def base_order_preccurlyeq(a, b, le=None) -> bool:
    """The recursive order on simplex tuples used to order a strongly loop-free base.

    ``le`` compares two vertices; defaults to integer comparison.

    >>> base_order_preccurlyeq((0, 2), (0, 1))
    True
    """
    if le is None:
        le = lambda i, j: i <= j
    if len(a) == 1:
        return le(a[0], b[0])
    if a[0] != b[0]:
        return le(a[0], b[0])
    return len(b) > 1 and base_order_preccurlyeq(b[1:], a[1:], le)


def count_kappa_simplices(C: SimplicialComplex, m: int) -> int:
    """Monotone maps [m] -> E whose image is a face.

    A map onto a face with ``s`` vertices is a composition of ``m + 1`` into
    ``s`` positive parts.
    """
    return sum(comb(m, len(face) - 1) for face in C.faces)


def nerve_simplices(K: Adc, n: int, cap: int):
    """ADC morphisms from normalized chains of the n-simplex into ``K``.

    Returns ``(morphisms, truncated)``.
    """
    from ._solver import systems_for

    source = standard_simplex_adc(n)
    simplices = [(p, b) for p, b in source.elements()]
    systems = systems_for(K)
    found = []
    truncated = False

    def search(index, maps):
        nonlocal truncated
        if index == len(simplices):
            found.append(AdcMorphism(source, K, dict(maps)))
            return
        p, b = simplices[index]
        if p == 0:
            rhs = {"aug": 1}
        else:
            lower = Chain.zero(p - 1)
            for face, coeff in source.diff[(p, b)]._coeffs.items():
                lower = lower + coeff * maps[(p - 1, face)]
            rhs = lower._coeffs
        solutions, cut = systems.solve(p, rhs, cap)
        truncated = truncated or cut
        for sol in solutions:
            maps[(p, b)] = Chain(p, sol)
            search(index + 1, maps)
        maps.pop((p, b), None)

    search(0, {})
    return found, truncated
