"""Threshold graphs via creation sequences.

A creation sequence is a string over ``I`` (add an isolated vertex) and
``D`` (add a vertex adjacent to everything so far).  The first symbol is
always ``I``; with that convention the ``2**(n-1)`` sequences of length
``n`` are in bijection with the unlabeled threshold graphs on ``n`` vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .graph import DegreeSequence, Graph, degree_sequence

__all__ = [
    "CreationSequence",
    "realize",
    "enumerate_creation",
    "is_threshold",
    "clique_number",
    "clique_number_from_degrees",
    "max_clique_size",
    "threshold_creations_by_size",
    "enumerate_threshold_by_size",
]


@dataclass(frozen=True)
class CreationSequence:
    steps: str

    def __post_init__(self):
        if not self.steps:
            raise ValueError("creation sequence must have at least one step")
        if set(self.steps) - {"I", "D"}:
            raise ValueError(f"creation sequence must use only 'I' and 'D': {self.steps!r}")
        if self.steps[0] != "I":
            raise ValueError(f"creation sequence must start with 'I': {self.steps!r}")

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    @property
    def size(self) -> int:
        """Edge count of the realisation: a ``D`` at position ``i`` adds ``i`` edges."""
        return sum(i for i, s in enumerate(self.steps) if s == "D")


def realize(c: CreationSequence | str) -> Graph:
    steps = c.steps if isinstance(c, CreationSequence) else CreationSequence(c).steps
    edges = [(u, v) for v, s in enumerate(steps) if s == "D" for u in range(v)]
    return Graph(len(steps), tuple(edges))


def enumerate_creation(n: int) -> Iterator[CreationSequence]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for tail in product("ID", repeat=n - 1):
        yield CreationSequence("I" + "".join(tail))


def is_threshold(g: Graph) -> bool:
    """Dismantle by repeatedly deleting an isolated or a dominating vertex."""
    adj = g.adjacency()
    alive = set(range(g.n))
    deg = {v: len(adj[v]) for v in alive}
    while alive:
        size = len(alive)
        v = next((u for u in alive if deg[u] == 0 or deg[u] == size - 1), None)
        if v is None:
            return False
        alive.remove(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
    return True


def clique_number_from_degrees(s: DegreeSequence) -> int:
    """``max{i : d_i >= i - 1}`` (1-based); equals the clique number of split graphs."""
    return max((i for i, d in enumerate(s, 1) if d >= i - 1), default=1)


def max_clique_size(g: Graph) -> int:
    """Exact clique number by branch and bound; fine for small graphs."""
    if g.n == 0:
        return 0
    adj = g.adjacency()
    best = 1

    def expand(size: int, candidates: set[int]) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        if size + len(candidates) <= best:
            return
        for v in sorted(candidates):
            if size + len(candidates) <= best:
                return
            expand(size + 1, candidates & adj[v])
            candidates = candidates - {v}

    expand(0, set(range(g.n)))
    return best


def clique_number(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("clique number of the empty graph is undefined")
    if is_threshold(g):
        return clique_number_from_degrees(degree_sequence(g))
    return max_clique_size(g)


def _distinct_position_sets(m: int, low: int) -> Iterator[list[int]]:
    # increasing lists of positions >= low summing to exactly m
    for p in range(low, m + 1):
        rest = m - p
        if rest == 0:
            yield [p]
        elif rest > p:
            for tail in _distinct_position_sets(rest, p + 1):
                yield [p] + tail


def threshold_creations_by_size(m: int) -> Iterator[CreationSequence]:
    """Creation sequences of every threshold graph with ``m`` edges and no isolated vertex.

    No isolated vertex means the sequence ends in ``D``; the ``D`` positions
    form a set of distinct positive integers summing to ``m`` whose largest
    element fixes the order ``n = max + 1``.
    """
    if m < 1:
        raise ValueError(f"size must be positive, got {m}")
    for positions in _distinct_position_sets(m, 1):
        marks = set(positions)
        yield CreationSequence("".join("D" if i in marks else "I" for i in range(positions[-1] + 1)))


def enumerate_threshold_by_size(m: int) -> Iterator[Graph]:
    """Every threshold graph with ``m`` edges and no isolated vertex, once each."""
    seen: set[DegreeSequence] = set()
    for seq in threshold_creations_by_size(m):
        g = realize(seq)
        key = degree_sequence(g)
        # threshold sequences have a unique realisation
        if key in seen:
            continue
        seen.add(key)
        yield g
