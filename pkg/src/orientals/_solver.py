"""Nonnegative integer solutions of ``d x = r`` with an exact completeness test.

For a column set ``A`` the cone ``{x >= 0 : A x = 0}`` is trivial exactly when
some row vector ``y`` has ``y A > 0`` in every column (Gordan).  Such a ``y``
is found once per degree by linear programming, rounded to integers and
re-verified exactly.  It bounds every solution: ``x_b <= (y r) / (y A)_b``.
So we know precisely when a coefficient cap cuts solutions off.
"""
from __future__ import annotations

import weakref
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

_AUG_ROW = "aug"


class LinearSystem:
    """Columns are sparse dicts ``row -> coefficient`` keyed by variable name."""

    def __init__(self, variables, columns):
        self.variables = list(variables)
        self.columns = [dict(col) for col in columns]
        rows = set()
        for col in self.columns:
            rows.update(col)
        self.rows = sorted(rows, key=repr)
        self._row_index = {r: i for i, r in enumerate(self.rows)}
        self._dense_cols = [[(self._row_index[r], c) for r, c in col.items() if c]
                            for col in self.columns]
        self._certificate = _gordan_certificate(self.rows, self.columns)
        self._cache = {}

    @property
    def bounded(self) -> bool:
        return self._certificate is not None

    def solve(self, rhs, cap):
        """Return ``(solutions, truncated)``.

        ``solutions`` lists every solution with all entries ``<= cap`` as
        ``{variable: value}`` dicts without zeros.  ``truncated`` is true iff
        some solution exceeds the cap (or could, when the cone is nontrivial).
        """
        rhs = {r: v for r, v in rhs.items() if v}
        key = (frozenset(rhs.items()), cap)
        if key not in self._cache:
            self._cache[key] = self._solve(rhs, cap)
        return self._cache[key]

    def _solve(self, rhs, cap):
        if any(r not in self._row_index for r in rhs):
            return [], False
        target = [0] * len(self.rows)
        for r, v in rhs.items():
            target[self._row_index[r]] = v
        if not self.variables:
            return ([{}] if not any(target) else []), False
        if self._certificate is None:
            sols = self._search(target, [cap] * len(self.variables))
            if sols:
                return sols, True
            return [], _lp_feasible(self.rows, self.columns, target)
        y, weights = self._certificate
        total = sum(yi * ti for yi, ti in zip(y, target))
        if total < 0:
            return [], False
        exact = [total // w for w in weights]
        bounds = [min(cap, u) for u in exact]
        sols = self._search(target, bounds)
        truncated = False
        for v, u in enumerate(exact):
            if u > cap:
                lower = [0] * len(self.variables)
                lower[v] = cap + 1
                if self._search(target, exact, lower=lower, first=True):
                    truncated = True
                    break
        return sols, truncated

    def _search(self, target, upper, lower=None, first=False):
        nvars = len(self.variables)
        nrows = len(self.rows)
        lower = lower or [0] * nvars
        cols = self._dense_cols
        # reach_hi/lo[v][r]: extreme contribution of variables v.. to row r
        reach_hi = [[0] * nrows for _ in range(nvars + 1)]
        reach_lo = [[0] * nrows for _ in range(nvars + 1)]
        for v in range(nvars - 1, -1, -1):
            hi, lo = list(reach_hi[v + 1]), list(reach_lo[v + 1])
            for r, c in cols[v]:
                a, b = c * lower[v], c * upper[v]
                hi[r] += max(a, b)
                lo[r] += min(a, b)
            reach_hi[v], reach_lo[v] = hi, lo
        residual = list(target)
        values = [0] * nvars
        out = []

        def feasible(v):
            hi, lo = reach_hi[v], reach_lo[v]
            for r in range(nrows):
                if not lo[r] <= residual[r] <= hi[r]:
                    return False
            return True

        def dfs(v):
            if v == nvars:
                if not any(residual):
                    out.append({self.variables[w]: values[w]
                                for w in range(nvars) if values[w]})
                    return first
                return False
            col = cols[v]
            for value in range(lower[v], upper[v] + 1):
                for r, c in col:
                    residual[r] -= c * value
                values[v] = value
                stop = feasible(v + 1) and dfs(v + 1)
                for r, c in col:
                    residual[r] += c * value
                if stop:
                    values[v] = 0
                    return True
            values[v] = 0
            return False

        if any(lower[v] > upper[v] for v in range(nvars)):
            return []
        if feasible(0):
            dfs(0)
        return out


def _gordan_certificate(rows, columns):
    """Integer ``y`` with ``y . column >= 1`` for every column, or ``None``."""
    if not columns:
        return [0] * len(rows), []
    if not rows or any(not col for col in columns):
        return None
    index = {r: i for i, r in enumerate(rows)}
    m, n = len(rows), len(columns)
    dense = np.zeros((m, n))
    for j, col in enumerate(columns):
        for r, c in col.items():
            dense[index[r], j] = c
    # maximise t subject to y.A_j >= t, |y| <= 1, t <= 1
    cost = np.zeros(m + 1)
    cost[-1] = -1.0
    a_ub = np.hstack([-dense.T, np.ones((n, 1))])
    bounds = [(-1, 1)] * m + [(None, 1)]
    res = linprog(cost, A_ub=a_ub, b_ub=np.zeros(n), bounds=bounds, method="highs")
    if res.status != 0 or -res.fun <= 1e-9:
        return None
    t = -res.fun
    for denom in (10**3, 10**6, 10**9):
        y = [Fraction(v / t).limit_denominator(denom) for v in res.x[:m]]
        weights = [sum(y[index[r]] * c for r, c in col.items()) for col in columns]
        if all(w > 0 for w in weights):
            scale = 1
            for v in y + weights:
                scale = scale * v.denominator // _gcd(scale, v.denominator)
            y_int = [int(v * scale) for v in y]
            w_int = [int(w * scale) for w in weights]
            return y_int, w_int
    return None


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _lp_feasible(rows, columns, target):
    index = {r: i for i, r in enumerate(rows)}
    dense = np.zeros((len(rows), len(columns)))
    for j, col in enumerate(columns):
        for r, c in col.items():
            dense[index[r], j] = c
    res = linprog(np.zeros(len(columns)), A_eq=dense, b_eq=np.array(target, dtype=float),
                  bounds=[(0, None)] * len(columns), method="highs")
    return res.status == 0


class ComplexSystems:
    """Per-degree systems of an Adc: degree 0 solves ``ε x = r``, degree p solves ``d x = r``."""

    def __init__(self, K):
        self._complex = weakref.ref(K)
        self._systems = {}

    @property
    def K(self):
        return self._complex()

    def system(self, degree):
        if degree not in self._systems:
            K = self.K
            names = K.names(degree)
            if degree == 0:
                cols = [{_AUG_ROW: K.aug[b]} for b in names]
            else:
                cols = [dict(K.diff[(degree, b)]._coeffs) for b in names]
            self._systems[degree] = LinearSystem(names, cols)
        return self._systems[degree]

    def solve(self, degree, rhs, cap):
        return self.system(degree).solve(rhs, cap)


_SYSTEMS = weakref.WeakKeyDictionary()


def systems_for(K) -> ComplexSystems:
    """Systems cached per complex (equal complexes share them)."""
    entry = _SYSTEMS.get(K)
    if entry is None:
        entry = ComplexSystems(K)
        _SYSTEMS[K] = entry
    return entry
