"""Brute-force oracles and per-claim verifiers.

``h`` depends on the degree sequence alone, and a sequence is realisable
exactly when it passes the Erdős–Gallai test, so "every graph with ``m``
edges" collapses to "every graphical partition of ``2m``".  All verdicts
below use the exact integer key ``prod d ** d``; floats only appear in
reports and in the telescoping check, which has no integer form.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator, Sequence

import mpmath

from .colex import build_colex_k, closed_form_degseq, colex_degseq
from .graph import DegreeSequence, degree_sequence, h_exact_key, h_value
from .majorization import balanced_gain, balanced_gain_argmax, compare_gain, sorted_compositions
from .threshold import clique_number, enumerate_threshold_by_size, is_threshold

__all__ = [
    "ExtremalReport",
    "VerificationOutcome",
    "erdos_gallai_violation",
    "is_graphical",
    "enumerate_graphical",
    "find_max_h",
    "verify_main_theorem",
    "verify_max_entropy",
    "verify_lemma_largeclique",
    "verify_equality_boundary",
    "verify_threshold_theorem",
    "verify_extremal_is_threshold",
    "verify_trees",
    "verify_bounded_degree",
    "verify_bounded_degree_sweep",
    "bounded_degree_expected",
    "verify_telescoping",
    "verify_balanced_gain",
    "TELESCOPING_MARGIN",
    "GAIN_MARGIN",
]

TELESCOPING_MARGIN = 1e-9
GAIN_MARGIN = 1e-9


def erdos_gallai_violation(s: Sequence[int]) -> int | None:
    """First failing Erdős–Gallai index (1-based), 0 for an odd sum, None if graphical."""
    d = sorted(s, reverse=True)
    if any(v < 0 for v in d):
        raise ValueError(f"negative entry in {list(s)}")
    if sum(d) % 2:
        return 0
    n = len(d)
    lhs = 0
    for k in range(1, n + 1):
        lhs += d[k - 1]
        rhs = k * (k - 1) + sum(min(v, k) for v in d[k:])
        if lhs > rhs:
            return k
    return None


def is_graphical(s: Sequence[int]) -> bool:
    return erdos_gallai_violation(s) is None


def _candidate_partitions(total: int) -> Iterator[list[int]]:
    """Partitions of ``total`` into positive parts with max part < number of parts.

    Reverse-lexicographic order; prunes on ``d_1 <= len - 1``, which every
    graphical sequence satisfies.
    """
    parts: list[int] = []

    def rec(remaining: int, cap: int) -> Iterator[list[int]]:
        if remaining == 0:
            if parts and parts[0] <= len(parts) - 1:
                yield list(parts)
            return
        for p in range(min(cap, remaining), 0, -1):
            # most parts reachable: every remaining unit becomes its own part
            longest = len(parts) + 1 + (remaining - p)
            first = parts[0] if parts else p
            if first > longest - 1:
                continue
            parts.append(p)
            yield from rec(remaining - p, p)
            parts.pop()

    yield from rec(total, total)


def enumerate_graphical(m: int) -> Iterator[DegreeSequence]:
    """Every graphical sequence of positive integers with sum ``2m``, once each."""
    if m < 1:
        raise ValueError(f"size must be positive, got {m}")
    for p in _candidate_partitions(2 * m):
        if is_graphical(p):
            yield DegreeSequence(p)


@dataclass(frozen=True)
class ExtremalReport:
    m: int
    argmax_sequences: tuple[DegreeSequence, ...]
    h_float: float
    exact_key: int
    expected: DegreeSequence
    verdict: str  # "match" | "mismatch" | "tie_with_expected"

    def to_row(self) -> dict:
        return {
            "m": self.m,
            "argmax": ";".join(map(str, self.argmax_sequences)),
            "exact_key": str(self.exact_key),
            "h": self.h_float,
            "verdict": self.verdict,
        }


@dataclass
class VerificationOutcome:
    claim_id: str
    parameter_range: str
    holds: bool
    counterexamples: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    rows: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "claim_id": self.claim_id,
            "parameter_range": self.parameter_range,
            "holds": self.holds,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
            "rows": self.rows,
        }
        if timing:
            out["elapsed"] = self.elapsed
        return out


def find_max_h(m: int, sequences: Callable[[int], Iterator[DegreeSequence]] = enumerate_graphical) -> ExtremalReport:
    """Exact argmax of ``h`` over all graphical sequences of size ``m``."""
    best_key = -1
    best: list[DegreeSequence] = []
    for s in sequences(m):
        key = h_exact_key(s)
        if key > best_key:
            best_key, best = key, [s]
        elif key == best_key:
            best.append(s)
    expected = colex_degseq(m)
    if best == [expected]:
        verdict = "match"
    elif expected in best:
        verdict = "tie_with_expected"
    else:
        verdict = "mismatch"
    return ExtremalReport(m, tuple(best), h_value(best[0]), best_key, expected, verdict)


# -- sweep plumbing -------------------------------------------------------

@dataclass
class _Check:
    rows: list[dict] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def _sweep(claim_id: str, parameter_range: str, worker, params: Sequence, jobs: int = 1) -> VerificationOutcome:
    start = time.perf_counter()
    if jobs > 1 and len(params) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            checks = list(pool.map(worker, params))
    else:
        checks = [worker(p) for p in params]
    outcome = VerificationOutcome(claim_id, parameter_range, True)
    # params are visited in order, so the merged report is independent of jobs
    for c in checks:
        outcome.rows.extend(c.rows)
        outcome.counterexamples.extend(c.counterexamples)
        outcome.notes.extend(c.notes)
    outcome.holds = not outcome.counterexamples
    outcome.elapsed = time.perf_counter() - start
    return outcome


# -- main theorem and maximum entropy ----------------------------------------

def _main_worker(args: tuple[int, bool]) -> _Check:
    m, require_unique = args
    report = find_max_h(m)
    check = _Check(rows=[report.to_row()])
    if report.verdict == "mismatch":
        check.counterexamples.append({"m": m, "reason": "argmax differs from C(m)", **report.to_row()})
    elif report.verdict == "tie_with_expected":
        check.notes.append(f"m={m}: exact tie among {len(report.argmax_sequences)} sequences including C(m)")
        if require_unique:
            check.counterexamples.append({"m": m, "reason": "C(m) ties with another sequence", **report.to_row()})
    return check


def verify_main_theorem(m_max: int, jobs: int = 1, require_unique: bool = True) -> VerificationOutcome:
    """For each ``m <= m_max`` the exact ``h``-argmax is the degree sequence of ``C(m)``.

    Exact ties with ``C(m)`` are always noted; they count as counterexamples
    only when ``require_unique`` is set.
    """
    if m_max < 1:
        raise ValueError("m_max must be positive")
    params = [(m, require_unique) for m in range(1, m_max + 1)]
    return _sweep("main", f"1 <= m <= {m_max}", _main_worker, params, jobs)


def _max_entropy_worker(m: int) -> _Check:
    ones = DegreeSequence([1] * (2 * m))
    minimisers = []
    min_key = None
    count = 0
    for s in enumerate_graphical(m):
        count += 1
        key = h_exact_key(s)
        if min_key is None or key < min_key:
            min_key, minimisers = key, [s]
        elif key == min_key:
            minimisers.append(s)
    check = _Check(rows=[{"m": m, "sequences": count, "min_key": str(min_key),
                          "argmin": ";".join(map(str, minimisers))}])
    if minimisers != [ones]:
        check.counterexamples.append({"m": m, "argmin": ";".join(map(str, minimisers))})
    return check


def verify_max_entropy(m_max: int, jobs: int = 1) -> VerificationOutcome:
    """The perfect matching ``m K_2`` is the unique ``h``-minimiser for each ``m <= m_max``."""
    if m_max < 1:
        raise ValueError("m_max must be positive")
    return _sweep("max-entropy", f"1 <= m <= {m_max}", _max_entropy_worker, list(range(1, m_max + 1)), jobs)


# -- colex comparisons ---------------------------------------------------------

def _largeclique_worker(args: tuple[int, int]) -> _Check:
    k, span = args
    check = _Check()
    lo = comb(k, 2)
    for m in range(lo, lo + span + 1):
        big = closed_form_degseq(m, k)
        small = closed_form_degseq(m, k - 1)
        if not h_exact_key(big) > h_exact_key(small):
            check.counterexamples.append({"k": k, "m": m, "C(m,k)": str(big), "C(m,k-1)": str(small)})
    check.rows.append({"k": k, "m_from": lo, "m_to": lo + span, "checked": span + 1})
    return check


def verify_lemma_largeclique(k_max: int, span: int, jobs: int = 1) -> VerificationOutcome:
    """``h(C(m,k)) > h(C(m,k-1))`` for ``3 <= k <= k_max`` and ``C(k,2) <= m <= C(k,2) + span``."""
    if k_max < 3:
        raise ValueError("k_max must be at least 3")
    params = [(k, span) for k in range(3, k_max + 1)]
    return _sweep("largeclique", f"3 <= k <= {k_max}, C(k,2) <= m <= C(k,2)+{span}",
                  _largeclique_worker, params, jobs)


def _boundary_worker(k: int) -> _Check:
    m = comb(k, 2) - 1
    a = closed_form_degseq(m, k)
    b = closed_form_degseq(m, k - 1)
    check = _Check(rows=[{"k": k, "m": m, "degrees": str(a)}])
    if a != b:
        check.counterexamples.append({"k": k, "m": m, "C(m,k)": str(a), "C(m,k-1)": str(b)})
    return check


def verify_equality_boundary(k_max: int, jobs: int = 1) -> VerificationOutcome:
    """``C(m,k)`` and ``C(m,k-1)`` share a degree sequence at ``m = C(k,2) - 1``."""
    if k_max < 3:
        raise ValueError("k_max must be at least 3")
    return _sweep("boundary", f"3 <= k <= {k_max}, m = C(k,2)-1", _boundary_worker,
                  list(range(3, k_max + 1)), jobs)


# -- threshold graphs ------------------------------------------------------------

def _threshold_worker(m: int) -> _Check:
    check = _Check()
    by_clique: dict[int, list[DegreeSequence]] = {}
    for g in enumerate_threshold_by_size(m):
        by_clique.setdefault(clique_number(g), []).append(degree_sequence(g))
    k = 2
    while comb(k, 2) <= m:  # a > 0 exactly when m >= C(k, 2)
        expected = closed_form_degseq(m, k)
        built = build_colex_k(m, k)
        if not is_threshold(built) or clique_number(built) != k:
            check.counterexamples.append({"m": m, "k": k, "reason": "C(m,k) is not a threshold graph of clique number k"})
        candidates = by_clique.get(k, [])
        best_key = max((h_exact_key(s) for s in candidates), default=None)
        winners = [s for s in candidates if h_exact_key(s) == best_key]
        check.rows.append({"m": m, "k": k, "candidates": len(candidates),
                           "argmax": ";".join(map(str, winners)), "expected": str(expected)})
        if winners != [expected]:
            check.counterexamples.append({"m": m, "k": k, "argmax": ";".join(map(str, winners)),
                                          "expected": str(expected)})
        k += 1
    return check


def verify_threshold_theorem(m_max: int, jobs: int = 1) -> VerificationOutcome:
    """Among threshold graphs of size ``m`` and clique number ``k`` (with ``a > 0``), ``C(m,k)`` uniquely maximises ``h``."""
    if m_max < 1:
        raise ValueError("m_max must be positive")
    return _sweep("threshold", f"1 <= m <= {m_max}, all k with a > 0", _threshold_worker,
                  list(range(1, m_max + 1)), jobs)


def _extremal_threshold_worker(m: int) -> _Check:
    realised = {degree_sequence(g): g for g in enumerate_threshold_by_size(m)}
    report = find_max_h(m)
    check = _Check()
    for s in report.argmax_sequences:
        g = realised.get(s)
        connected = g is not None and g.is_connected()
        check.rows.append({"m": m, "argmax": str(s), "threshold": g is not None, "connected": connected})
        if g is None:
            check.counterexamples.append({"m": m, "argmax": str(s), "reason": "no threshold realisation"})
        elif not connected:
            check.counterexamples.append({"m": m, "argmax": str(s), "reason": "threshold realisation disconnected"})
    return check


def verify_extremal_is_threshold(m_max: int, jobs: int = 1) -> VerificationOutcome:
    """Every ``h``-maximising sequence of size ``m`` is realised by a connected threshold graph."""
    if m_max < 1:
        raise ValueError("m_max must be positive")
    return _sweep("extremal-threshold", f"1 <= m <= {m_max}", _extremal_threshold_worker,
                  list(range(1, m_max + 1)), jobs)


# -- trees ---------------------------------------------------------------------------

def _tree_sequences(n: int) -> Iterator[DegreeSequence]:
    # positive length-n sequences summing to 2(n-1): shift compositions of n-2 by one
    for z in sorted_compositions(n - 2, n):
        yield DegreeSequence(v + 1 for v in z)


def _trees_worker(n: int) -> _Check:
    check = _Check()
    seqs = list(_tree_sequences(n))
    keys = {s: h_exact_key(s) for s in seqs}
    star = DegreeSequence([n - 1] + [1] * (n - 1))
    path = DegreeSequence([2] * (n - 2) + [1, 1])
    top = max(keys.values())
    bottom = min(keys.values())
    argmax = [s for s in seqs if keys[s] == top]
    argmin = [s for s in seqs if keys[s] == bottom]
    row = {"n": n, "sequences": len(seqs), "max": ";".join(map(str, argmax)), "min": ";".join(map(str, argmin))}
    if argmax != [star]:
        check.counterexamples.append({"n": n, "reason": "maximum is not uniquely the star", "argmax": row["max"]})
    if argmin != [path]:
        check.counterexamples.append({"n": n, "reason": "minimum is not uniquely the path", "argmin": row["min"]})
    if n <= 4:
        check.notes.append(f"n={n}: second-smallest clause skipped (no tree with exactly 3 leaves)")
        row["second"] = ""
    else:
        three_leaf = DegreeSequence([3] + [2] * (n - 4) + [1, 1, 1])
        second_key = min(v for v in keys.values() if v > bottom)
        second = [s for s in seqs if keys[s] == second_key]
        row["second"] = ";".join(map(str, second))
        if second != [three_leaf]:
            check.counterexamples.append({"n": n, "reason": "second-smallest h not exactly the 3-leaf sequence",
                                          "second": row["second"]})
    check.rows.append(row)
    return check


def verify_trees(n_max: int, jobs: int = 1, n_min: int = 3) -> VerificationOutcome:
    """Star maximises and path minimises ``h`` among trees; 3-leaf trees are second smallest."""
    if n_max < 3 or n_min < 3:
        raise ValueError("tree orders start at 3")
    return _sweep("trees", f"{n_min} <= n <= {n_max}", _trees_worker, list(range(n_min, n_max + 1)), jobs)


# -- bounded maximum degree ----------------------------------------------------------

def bounded_degree_expected(m: int, r: int) -> DegreeSequence:
    """Predicted ``h``-maximiser among graphs of size ``m`` with maximum degree at most ``r``."""
    if m <= comb(r + 1, 2):
        return colex_degseq(m)
    q, rem = divmod(2 * m, r)
    return DegreeSequence([r] * q + ([rem] if rem else []))


def _bounded_worker(args: tuple[int, int]) -> _Check:
    m, r = args
    expected = bounded_degree_expected(m, r)
    best_key = -1
    best: list[DegreeSequence] = []
    for s in enumerate_graphical(m):
        if s[0] > r:
            continue
        key = h_exact_key(s)
        if key > best_key:
            best_key, best = key, [s]
        elif key == best_key:
            best.append(s)
    regime = "colex" if m <= comb(r + 1, 2) else "near-regular"
    check = _Check(rows=[{"m": m, "r": r, "regime": regime, "argmax": ";".join(map(str, best)),
                          "expected": str(expected)}])
    if best != [expected]:
        check.counterexamples.append({"m": m, "r": r, "argmax": ";".join(map(str, best)), "expected": str(expected)})
    return check


def verify_bounded_degree(m: int, r: int) -> VerificationOutcome:
    """Maximum degree at most ``r``: ``C(m)`` wins while ``m <= C(r+1,2)``, else the near ``r``-regular sequence."""
    if m < 1 or r < 1:
        raise ValueError("m and r must be positive")
    return _sweep("bounded-degree", f"m = {m}, r = {r}", _bounded_worker, [(m, r)])


def verify_bounded_degree_sweep(m_max: int, rs: Sequence[int], jobs: int = 1) -> VerificationOutcome:
    if m_max < 1 or not rs or min(rs) < 1:
        raise ValueError("m_max and every r must be positive")
    params = [(m, r) for r in rs for m in range(1, m_max + 1)]
    return _sweep("bounded-degree", f"r in {{{','.join(map(str, rs))}}}, 1 <= m <= {m_max}",
                  _bounded_worker, params, jobs)


# -- telescoping inequality --------------------------------------------------------

def telescoping_sides(k: int, a: int, dps: int = 50) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Both sides of ``a [f(k+a-1) - f(k+a-2) - f(k-1) + f(k-2)] <= f(k-2+a) + f(k-2-a) - 2 f(k-2)``."""
    with mpmath.workdps(dps):
        def f(x):
            return mpmath.mpf(0) if x == 0 else mpmath.mpf(x) * mpmath.log(x)
        lhs = a * (f(k + a - 1) - f(k + a - 2) - f(k - 1) + f(k - 2))
        rhs = f(k - 2 + a) + f(k - 2 - a) - 2 * f(k - 2)
        return +lhs, +rhs


def _telescoping_worker(k: int) -> _Check:
    check = _Check()
    min_margin = None
    for a in range(0, k - 1):
        lhs, rhs = telescoping_sides(k, a)
        margin = rhs - lhs
        if a == 0:
            if lhs != 0 or rhs != 0:
                check.counterexamples.append({"k": k, "a": 0, "status": "violated", "margin": float(margin)})
            continue
        min_margin = margin if min_margin is None else min(min_margin, margin)
        if margin < 0:
            check.counterexamples.append({"k": k, "a": a, "status": "violated", "margin": float(margin)})
        elif margin < TELESCOPING_MARGIN:
            check.counterexamples.append({"k": k, "a": a, "status": "inconclusive", "margin": float(margin)})
    check.rows.append({"k": k, "min_margin": float(min_margin) if min_margin is not None else None})
    return check


def verify_telescoping(k_max: int, jobs: int = 1) -> VerificationOutcome:
    """High-precision check of the telescoping inequality for ``3 <= k <= k_max``, ``0 <= a <= k-2``.

    Strictness for ``a > 0`` is accepted only with margin at least
    ``TELESCOPING_MARGIN``; smaller positive margins are reported as
    inconclusive.
    """
    if k_max < 3:
        raise ValueError("k_max must be at least 3")
    outcome = _sweep("telescoping", f"3 <= k <= {k_max}, 0 <= a <= k-2", _telescoping_worker,
                     list(range(3, k_max + 1)), jobs)
    margins = [r["min_margin"] for r in outcome.rows if r["min_margin"] is not None]
    if margins:
        outcome.notes.append(f"minimum margin over a > 0: {min(margins):.6e}")
    return outcome


# -- balanced gain ------------------------------------------------------------------

def _balanced_gain_worker(args: tuple[int, int, int]) -> _Check:
    t, n_max, ell_max = args
    check = _Check()
    for n in range(1, n_max + 1):
        for ell in range(1, ell_max + 1):
            best = balanced_gain_argmax(t, n, ell)
            best_gain = balanced_gain(best, ell)
            min_margin = None
            count = 0
            for z in sorted_compositions(t, n):
                count += 1
                if z == best:
                    continue
                order = compare_gain(best, z, ell)
                margin = best_gain - balanced_gain(z, ell)
                min_margin = margin if min_margin is None else min(min_margin, margin)
                if order < 0:
                    check.counterexamples.append({"t": t, "n": n, "ell": ell, "beaten_by": list(z)})
                elif order == 0:
                    check.counterexamples.append({"t": t, "n": n, "ell": ell, "tied_with": list(z)})
                elif margin <= GAIN_MARGIN:
                    check.notes.append(f"t={t} n={n} ell={ell}: float margin {margin:.3e} below {GAIN_MARGIN:g}, "
                                       "decided by exact comparison")
            check.rows.append({"t": t, "n": n, "ell": ell, "compositions": count, "argmax": list(best),
                               "min_margin": min_margin})
    return check


def verify_balanced_gain(t_max: int, n_max: int, ell_max: int, jobs: int = 1) -> VerificationOutcome:
    """The near-balanced split uniquely maximises ``sum f(z+ell) - sum f(z)`` over sorted compositions."""
    if t_max < 0 or n_max < 1 or ell_max < 1:
        raise ValueError("need t_max >= 0, n_max >= 1, ell_max >= 1")
    params = [(t, n_max, ell_max) for t in range(t_max + 1)]
    return _sweep("balanced-gain", f"0 <= t <= {t_max}, 1 <= n <= {n_max}, 1 <= ell <= {ell_max}",
                  _balanced_gain_worker, params, jobs)
