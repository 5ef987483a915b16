"""Colex graphs ``C(m)`` and their clique-parameter variants ``C(m, k)``.

``C(m)``: write ``m = C(k, 2) + l`` with ``0 <= l < k``; take a clique on
``k`` vertices and, when ``l > 0``, one more vertex joined to ``l`` of them.

``C(m, k)``: write ``m = C(k-1, 2) + a(k-1) + b`` with ``a >= 0`` and
``0 <= b <= k-2``; take a clique on ``k-1`` vertices, ``a`` independent
vertices joined to the whole clique, and, when ``b > 0``, one more vertex
joined to ``b`` clique vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, isqrt

from .graph import DegreeSequence, Graph

__all__ = [
    "ColexDecomposition",
    "decompose_global",
    "build_colex",
    "decompose",
    "build_colex_k",
    "closed_form_degseq",
    "colex_degseq",
    "lift_decomposition",
]


def decompose_global(m: int) -> tuple[int, int]:
    """Return ``(k, l)`` with ``m = C(k, 2) + l`` and ``0 <= l < k``."""
    if m < 1:
        raise ValueError(f"size must be positive, got {m}")
    # largest k with k(k-1)/2 <= m
    k = (1 + isqrt(1 + 8 * m)) // 2
    while comb(k, 2) > m:
        k -= 1
    while comb(k + 1, 2) <= m:
        k += 1
    return k, m - comb(k, 2)


def build_colex(m: int) -> Graph:
    k, ell = decompose_global(m)
    edges = list(combinations(range(k), 2))
    if ell:
        edges += [(v, k) for v in range(ell)]
        return Graph(k + 1, tuple(edges))
    return Graph(k, tuple(edges))


def decompose(m: int, k: int) -> tuple[int, int]:
    """Return ``(a, b)`` with ``m = C(k-1, 2) + a(k-1) + b`` and ``0 <= b <= k-2``."""
    if k < 2:
        raise ValueError(f"clique parameter must be at least 2, got {k}")
    base = comb(k - 1, 2)
    if m < base:
        raise ValueError(f"m too small for clique parameter k: m={m} < C({k - 1},2)={base}")
    return divmod(m - base, k - 1)


def build_colex_k(m: int, k: int) -> Graph:
    """Build ``C(m, k)``.

    Vertex labels: clique ``0..k-2``, then the ``a`` stable-set vertices,
    then the partially attached vertex (only when ``b > 0``).
    """
    a, b = decompose(m, k)
    clique = range(k - 1)
    edges = list(combinations(clique, 2))
    n = k - 1
    for _ in range(a):
        edges += [(v, n) for v in clique]
        n += 1
    if b:
        edges += [(v, n) for v in range(b)]
        n += 1
    return Graph(n, tuple(edges))


def closed_form_degseq(m: int, k: int) -> DegreeSequence:
    """Degree sequence ``((k-1+a)^b, (k-2+a)^(k-1-b), (k-1)^a, b)`` of ``C(m, k)``.

    The trailing ``b`` is dropped when ``b == 0``.
    """
    a, b = decompose(m, k)
    degs = [k - 1 + a] * b + [k - 2 + a] * (k - 1 - b) + [k - 1] * a
    if b:
        degs.append(b)
    return DegreeSequence.of(degs)


def colex_degseq(m: int) -> DegreeSequence:
    """Degree sequence of ``C(m)``, read off ``C(m, k+1)`` with ``(k, l) = decompose_global(m)``."""
    k, _ = decompose_global(m)
    return closed_form_degseq(m, k + 1)


def lift_decomposition(m: int, k: int) -> tuple[int, int]:
    """``(a', b')`` for clique parameter ``k-1``, derived from ``(a, b) = decompose(m, k)``."""
    if k < 3:
        raise ValueError(f"lift needs k >= 3, got {k}")
    a, b = decompose(m, k)
    q, r = divmod(a + b, k - 2)
    return a + 1 + q, r


@dataclass(frozen=True)
class ColexDecomposition:
    m: int
    k: int
    a: int
    b: int
    a_lift: int | None = None
    b_lift: int | None = None

    @classmethod
    def of(cls, m: int, k: int) -> "ColexDecomposition":
        a, b = decompose(m, k)
        if k >= 3:
            return cls(m, k, a, b, *lift_decomposition(m, k))
        return cls(m, k, a, b)

    def degree_sequence(self) -> DegreeSequence:
        return closed_form_degseq(self.m, self.k)
