"""Graded multi-index bookkeeping for monomial bases and moment vectors.

Every moment vector and least-squares row in the package is laid out along
the ordering defined here: all multi-indices p with |p| <= max_degree, sorted
by total degree and then lexicographically. The graded ordering makes the
subset {p : |p| < P} a prefix of any higher-order table, so moment vectors
computed once per entity can be truncated for lower-order schemes.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb

import numpy as np


def multi_indices(dim: int, max_degree: int) -> list[tuple[int, ...]]:
    """All D-tuples of non-negative integers with |p| <= max_degree, graded order."""
    idx = [p for p in product(range(max_degree + 1), repeat=dim) if sum(p) <= max_degree]
    idx.sort(key=lambda p: (sum(p), p))
    return idx


def count_below(dim: int, degree: int) -> int:
    """Number of multi-indices with |p| < degree, i.e. C(degree - 1 + dim, dim)."""
    return comb(degree - 1 + dim, dim)


@lru_cache(maxsize=None)
def index_set(dim: int, max_degree: int) -> "MultiIndexSet":
    return MultiIndexSet(dim, max_degree)


class MultiIndexSet:
    """Monomial exponent table with translation and differentiation helpers."""

    def __init__(self, dim: int, max_degree: int):
        self.dim = dim
        self.max_degree = max_degree
        self.tuples = multi_indices(dim, max_degree)
        self.exps = np.array(self.tuples, dtype=np.int64)
        self.degrees = self.exps.sum(axis=1)
        self.size = len(self.tuples)
        self._pos = {p: i for i, p in enumerate(self.tuples)}
        # index of p - e^d, or -1 when p_d == 0
        self.shift_down = np.full((self.size, dim), -1, dtype=np.int64)
        for i, p in enumerate(self.tuples):
            for d in range(dim):
                if p[d] > 0:
                    q = list(p)
                    q[d] -= 1
                    self.shift_down[i, d] = self._pos[tuple(q)]
        self._translation_pairs = self._build_translation_pairs()

    def index_of(self, p) -> int:
        return self._pos[tuple(int(c) for c in p)]

    def prefix(self, degree: int) -> int:
        """Length of the leading block holding all p with |p| <= degree."""
        return int(np.searchsorted(self.degrees, degree + 1))

    def monomials(self, points: np.ndarray, x0: np.ndarray, scale: float = 1.0) -> np.ndarray:
        """Evaluate ((x - x0)/scale)^p for all p; returns (npoints, size)."""
        pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
        t = (pts - np.asarray(x0, dtype=np.float64)) / scale
        # per-axis power tables, then gather-products over <= 3 axes
        pows = np.ones((t.shape[0], self.max_degree + 1, self.dim))
        for k in range(1, self.max_degree + 1):
            pows[:, k, :] = pows[:, k - 1, :] * t
        out = pows[:, self.exps[:, 0], 0]
        for d in range(1, self.dim):
            out = out * pows[:, self.exps[:, d], d]
        return out

    def _build_translation_pairs(self):
        ip, iq, coeff, dexp = [], [], [], []
        for i, p in enumerate(self.tuples):
            for q in product(*(range(c + 1) for c in p)):
                ip.append(i)
                iq.append(self._pos[q])
                coeff.append(float(np.prod([comb(p[d], q[d]) for d in range(self.dim)])))
                dexp.append(tuple(p[d] - q[d] for d in range(self.dim)))
        return (
            np.array(ip, dtype=np.int64),
            np.array(iq, dtype=np.int64),
            np.array(coeff, dtype=np.float64),
            np.array(dexp, dtype=np.int64),
        )

    @property
    def translation_pairs(self):
        """(ip, iq, coeff, dexp) such that m^p(x0) = sum coeff * delta^dexp * m^q(c)
        with delta = c - x0; exact for any measure by the binomial theorem."""
        return self._translation_pairs

    def translation_matrix(self, delta: np.ndarray) -> np.ndarray:
        """Dense (size, size) matrix T with m(x0) = T @ m(c), delta = c - x0."""
        ip, iq, coeff, dexp = self._translation_pairs
        delta = np.asarray(delta, dtype=np.float64)
        dpow = np.prod(delta[None, :] ** dexp, axis=1)
        T = np.zeros((self.size, self.size))
        np.add.at(T, (ip, iq), coeff * dpow)
        return T
