"""Majorization order, a Karamata check, and the balanced-gain maximiser."""
from __future__ import annotations

import math
from itertools import accumulate
from typing import Callable, Iterable, Iterator

from .graph import f_xlogx

__all__ = [
    "normalize_pair",
    "majorizes",
    "check_karamata",
    "sorted_compositions",
    "balanced_gain",
    "compare_gain",
    "balanced_gain_argmax",
]


def normalize_pair(x: Iterable[int], y: Iterable[int]) -> tuple[list[int], list[int]]:
    """Sort both non-increasing and zero-pad to a common length."""
    xs = sorted(x, reverse=True)
    ys = sorted(y, reverse=True)
    n = max(len(xs), len(ys))
    return xs + [0] * (n - len(xs)), ys + [0] * (n - len(ys))


def majorizes(x: Iterable[int], y: Iterable[int]) -> bool:
    xs, ys = normalize_pair(x, y)
    if sum(xs) != sum(ys):
        return False
    return all(px >= py for px, py in zip(accumulate(xs), accumulate(ys)))


def check_karamata(
    x: Iterable[int],
    y: Iterable[int],
    g: Callable[[int], float] = f_xlogx,
    strict_convex: bool = False,
) -> bool:
    """Check ``sum g(x) >= sum g(y)`` for a majorizing pair.

    With ``strict_convex`` the inequality must be strict whenever the
    (sorted, padded) sequences differ.
    """
    xs, ys = normalize_pair(x, y)
    if not majorizes(xs, ys):
        raise ValueError(f"not a majorizing pair: {xs} does not majorize {ys}")
    gx = math.fsum(g(v) for v in xs)
    gy = math.fsum(g(v) for v in ys)
    if strict_convex and xs != ys:
        return gx > gy
    return gx >= gy


def sorted_compositions(t: int, n: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing length-``n`` tuples of non-negative integers summing to ``t``.

    Reverse-lexicographic order, starting from ``(t, 0, ..., 0)``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")

    def rec(remaining: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        # the largest part must be at least ceil(remaining / slots)
        for first in range(min(cap, remaining), -(-remaining // slots) - 1, -1):
            for rest in rec(remaining - first, slots - 1, first):
                yield (first,) + rest

    yield from rec(t, n, t)


def balanced_gain(z: Iterable[int], ell: int) -> float:
    """``sum f(z_j + ell) - sum f(z_j)`` in floating point."""
    return math.fsum(f_xlogx(v + ell) - f_xlogx(v) for v in z)


def _gain_fraction(z: Iterable[int], ell: int) -> tuple[int, int]:
    # gain = ln(num / den) exactly
    num = den = 1
    for v in z:
        num *= (v + ell) ** (v + ell)
        if v > 1:
            den *= v ** v
    return num, den


def compare_gain(z: Iterable[int], w: Iterable[int], ell: int) -> int:
    """Exact three-way comparison of ``balanced_gain(z)`` and ``balanced_gain(w)``."""
    nz, dz = _gain_fraction(z, ell)
    nw, dw = _gain_fraction(w, ell)
    lhs, rhs = nz * dw, nw * dz
    return (lhs > rhs) - (lhs < rhs)


def balanced_gain_argmax(t: int, n: int, ell: int) -> tuple[int, ...]:
    """The near-balanced split of ``t`` into ``n`` parts, largest parts first.

    ``t mod n`` parts equal ``ceil(t/n)`` and the rest ``floor(t/n)``.  Since
    ``z -> f(z + ell) - f(z)`` is strictly concave, this split (the bottom
    of the majorization order) maximises the gain.
    """
    if t < 0 or n < 1 or ell < 1:
        raise ValueError(f"need t >= 0, n >= 1, ell >= 1; got t={t}, n={n}, ell={ell}")
    q, r = divmod(t, n)
    return (q + 1,) * r + (q,) * (n - r)
