"""Graphs, degree sequences and the degree-based entropy functionals.

Entropy of a graph of size ``m`` with degrees ``d_i``::

    I(G) = -sum (d_i / 2m) log(d_i / 2m) = log(2m) - h(G) / 2m,   h(G) = sum d_i log d_i

Minimising ``I`` at fixed size is the same as maximising ``h``.  Because
``h = log(prod d_i ** d_i)``, two sequences can be ranked by ``h`` exactly by
comparing the integer ``prod d_i ** d_i``; every extremality decision in this
package goes through that integer key.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable

__all__ = [
    "Graph",
    "DegreeSequence",
    "degree_sequence",
    "f_xlogx",
    "h_value",
    "h_exact_key",
    "compare_h",
    "entropy",
    "h_generic",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are normalised to ``(min, max)`` pairs and kept sorted, so equal
    graphs compare equal and serialise identically.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        normalised = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            pair = (u, v) if u < v else (v, u)
            if pair in normalised:
                raise ValueError(f"duplicate edge {pair}")
            normalised.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(normalised)))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> "Graph":
        """Build a graph from an edge iterable, inferring ``n`` if omitted."""
        edges = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, tuple(edges))

    @property
    def size(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        """Per-vertex degrees, indexed by vertex."""
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def is_connected(self) -> bool:
        """Connectivity of the non-isolated part (isolated vertices are ignored)."""
        adj = self.adjacency()
        active = [v for v in range(self.n) if adj[v]]
        if not active:
            return True
        seen = {active[0]}
        stack = [active[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(active)


class DegreeSequence(tuple):
    """Non-increasing tuple of positive integers.

    Degree-0 vertices never appear: they contribute nothing to ``h`` or to
    the entropy sum.  Use :meth:`of` to sort and strip zeros from raw input.
    """

    def __new__(cls, degrees: Iterable[int] = ()):
        values = tuple(int(d) for d in degrees)
        if any(d <= 0 for d in values):
            raise ValueError(f"degrees must be positive: {values}")
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise ValueError(f"degrees must be non-increasing: {values}")
        return super().__new__(cls, values)

    @classmethod
    def of(cls, degrees: Iterable[int]) -> "DegreeSequence":
        values = [int(d) for d in degrees]
        if any(d < 0 for d in values):
            raise ValueError(f"negative degree in {values}")
        return cls(sorted((d for d in values if d > 0), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse comma-separated integers, e.g. ``"3,2,2,1"``."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        try:
            return cls.of(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse degree sequence {text!r}: {exc}") from None

    @property
    def total(self) -> int:
        return sum(self)

    @property
    def size(self) -> int:
        """Number of edges ``m``; requires an even degree sum."""
        s = self.total
        if s % 2:
            raise ValueError(f"degree sum {s} is odd: not a graph degree sum")
        return s // 2

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"DegreeSequence({str(self)!r})"


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence.of(g.degrees())


def f_xlogx(x: float) -> float:
    """``x * ln(x)`` with ``f(0) = 0``."""
    if x < 0:
        raise ValueError(f"f is defined on x >= 0, got {x}")
    if x == 0:
        return 0.0
    return x * math.log(x)


def h_value(s: Iterable[int]) -> float:
    return math.fsum(f_xlogx(d) for d in s)


def h_exact_key(s: Iterable[int]) -> int:
    """``prod d ** d`` as an exact integer; ``h = ln(key)``."""
    key = 1
    for d, count in Counter(s).items():
        if d > 1:
            key *= d ** (d * count)
    return key


def compare_h(a: Iterable[int], b: Iterable[int]) -> int:
    """Exact three-way comparison of ``h(a)`` and ``h(b)`` (-1, 0 or 1).

    Both sequences must have the same degree sum.
    """
    a, b = tuple(a), tuple(b)
    if sum(a) != sum(b):
        raise ValueError(f"incomparable sizes: degree sums {sum(a)} and {sum(b)}")
    ka, kb = h_exact_key(a), h_exact_key(b)
    return (ka > kb) - (ka < kb)


def entropy(s: Iterable[int]) -> float:
    """First degree-based entropy ``ln(2m) - h / 2m`` (natural log)."""
    s = tuple(s)
    total = sum(s)
    if total <= 0:
        raise ValueError("entropy needs a non-empty degree sequence")
    if total % 2:
        raise ValueError(f"degree sum {total} is odd: not a graph degree sum")
    return math.log(total) - h_value(s) / total


def h_generic(s: Iterable[int], g: Callable[[int], float]) -> float:
    """``sum g(d)`` for an arbitrary weight function ``g``."""
    return math.fsum(g(d) for d in s)
