"""Exact Stanley depth through interval partitions of a characteristic poset.

``sdepth >= s`` holds iff the poset splits into disjoint intervals ``[F, G]``
whose tops all satisfy ``rho(G) >= s``. The decision version is solved as an
exact cover problem; :func:`sdepth_of_poset` scans ``s`` downward from an
upper bound until a partition exists.

Two facts shrink the search without losing completeness.

Reduced intervals. Any valid interval can be cut into valid intervals of the
form ``[a, a raised to g on T]`` with ``|T| = s - rho(a)``. Slice the interval
along each coordinate where ``G`` stays below ``g`` (the slices keep the same
``rho``), then split any saturated coordinate ``j`` into ``[F_j, g_j - 1]``
and ``{g_j}`` while ``rho`` exceeds ``s`` (both halves keep ``rho >= s``).

High points. A member with ``rho(b) >= s`` is a valid singleton by itself, so
only the low members (``rho < s``) must be covered exactly once; high members
are covered at most once and the leftovers become singletons.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .ideal import MonomialIdeal
from .monomial import ExponentVector, lex_key
from .poset import (
    CharPoset,
    EmptyPosetError,
    Interval,
    Mode,
    build_ideal_poset,
    build_quotient_poset,
    minimal_members,
    rho,
)

BRUTE_FORCE_CAP = 14


class SearchBudgetExceeded(RuntimeError):
    """The search ran past its time budget without reaching a verdict."""


class ResourceError(RuntimeError):
    """An input is too large for the requested exhaustive procedure."""


@dataclass
class SearchStats:
    nodes: int = 0
    decision_calls: int = 0
    lp_refutations: int = 0


@dataclass
class PartitionCertificate:
    """A partition of a poset into intervals, witnessing ``sdepth >= claimed_sdepth``.

    Each interval ``[F, G]`` corresponds to the Stanley space
    ``(sum of x^b, F <= b <= G) * K[x_j : G_j = g_j]`` of dimension ``rho(G)``;
    together they form a Stanley decomposition of the module.
    """

    intervals: list[Interval]
    claimed_sdepth: int
    g: ExponentVector
    mode: Mode

    def to_dict(self) -> dict:
        ivs = sorted(self.intervals, key=lambda iv: (lex_key(iv.F), lex_key(iv.G)))
        return {
            "claimed_sdepth": self.claimed_sdepth,
            "g": list(self.g),
            "mode": self.mode.value,
            "intervals": [{"F": list(iv.F), "G": list(iv.G)} for iv in ivs],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "PartitionCertificate":
        return cls(
            intervals=[Interval(iv["F"], iv["G"]) for iv in data["intervals"]],
            claimed_sdepth=int(data["claimed_sdepth"]),
            g=ExponentVector(data["g"]),
            mode=Mode(data["mode"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "PartitionCertificate":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# exact cover model


@dataclass
class _CoverProblem:
    """Rows are candidate intervals; columns are members in (degree, lex) rank."""

    s: int
    points: tuple[ExponentVector, ...]
    low: list[int]
    rows: list[tuple[int, ...]] = field(default_factory=list)
    bounds: list[tuple[ExponentVector, ExponentVector]] = field(default_factory=list)


def _candidate_tops(P: CharPoset, a: ExponentVector, s: int, reduced: bool):
    g = P.g
    if reduced:
        free = [j for j in range(P.n) if a[j] < g[j]]
        for T in itertools.combinations(free, s - rho(a, g)):
            G = list(a)
            for j in T:
                G[j] = g[j]
            yield ExponentVector(G)
    else:
        for G in itertools.product(*(range(x, y + 1) for x, y in zip(a, g))):
            if rho(G, g) >= s:
                yield ExponentVector(G)


def _build_problem(P: CharPoset, s: int, reduced: bool = True) -> _CoverProblem:
    points = P.members
    rank = np.full(P.volume, -1, dtype=np.int64)
    for r, a in enumerate(points):
        rank[P.index(a)] = r
    grid = P.index_grid
    low = [r for r, a in enumerate(points) if rho(a, P.g) < s]
    cands = []
    for r in low:
        a = points[r]
        for G in _candidate_tops(P, a, s, reduced):
            sl = tuple(slice(x, y + 1) for x, y in zip(a, G))
            if P.table[sl].all():
                cols = tuple(sorted(int(c) for c in rank[grid[sl].ravel()]))
                cands.append(((lex_key(a), -rho(G, P.g), -sum(G), tuple(G)), a, G, cols))
    # Row ids follow the trial order: by anchor, then deep high-rho intervals
    # first. Sorting globally by depth instead stalls on (n, t) = (6, 3).
    cands.sort(key=lambda c: c[0])
    prob = _CoverProblem(s, points, low)
    for _, a, G, cols in cands:
        prob.rows.append(cols)
        prob.bounds.append((a, G))
    return prob


def _lp_refutes(prob: _CoverProblem) -> bool:
    """True when even the fractional relaxation of the cover has no solution."""
    from scipy.optimize import linprog
    from scipy.sparse import csr_matrix

    if not prob.low:
        return False
    if not prob.rows:
        return True
    ri, ci = [], []
    for k, cols in enumerate(prob.rows):
        ri.extend(cols)
        ci.extend([k] * len(cols))
    A = csr_matrix((np.ones(len(ri)), (ri, ci)), shape=(len(prob.points), len(prob.rows)))
    low = np.array(prob.low)
    high = np.setdiff1d(np.arange(len(prob.points)), low)
    kwargs = {}
    if len(high):
        kwargs = {"A_ub": A[high], "b_ub": np.ones(len(high))}
    res = linprog(
        np.zeros(len(prob.rows)),
        A_eq=A[low],
        b_eq=np.ones(len(low)),
        bounds=(0, 1),
        method="highs",
        **kwargs,
    )
    return res.status == 2


class _Search:
    """Algorithm X over dict-of-sets; low points primary, high points secondary."""

    def __init__(self, prob: _CoverProblem, branching: str, deadline: float | None):
        if branching not in ("mrv", "anchor"):
            raise ValueError(f"unknown branching rule {branching!r}")
        self.rows = prob.rows
        self.branching = branching
        self.deadline = deadline
        self.nodes = 0
        self.X: dict[int, set[int]] = {c: set() for c in range(len(prob.points))}
        for k, cols in enumerate(prob.rows):
            for c in cols:
                self.X[c].add(k)
        self.primary = set(prob.low)

    def select(self, r: int):
        X, rows = self.X, self.rows
        saved = []
        for j in rows[r]:
            for i in X[j]:
                for k in rows[i]:
                    if k != j:
                        X[k].discard(i)
            saved.append(X.pop(j))
        covered = [j for j in rows[r] if j in self.primary]
        self.primary.difference_update(covered)
        return saved, covered

    def deselect(self, r: int, saved, covered) -> None:
        X, rows = self.X, self.rows
        self.primary.update(covered)
        for j in reversed(rows[r]):
            X[j] = saved.pop()
            for i in X[j]:
                for k in rows[i]:
                    if k != j:
                        X[k].add(i)

    def choose(self) -> int:
        if self.branching == "anchor":
            # The least uncovered low point must be the bottom of its interval:
            # any interval through it starts at some F <= it, F is low too
            # (rho only grows upward) and uncovered, so minimality forces F = it.
            return min(self.primary)
        X = self.X
        return min(self.primary, key=lambda c: (len(X[c]), c))

    def run(self, forced: int | None = None) -> list[int] | None:
        """Depth-first search; returns the chosen row ids or None."""
        if forced is not None:
            if not all(c in self.X for c in self.rows[forced]):
                return None
            self.select(forced)
        chosen: list[int] = []
        # frame: [candidate rows, next position, undo record of the active row]
        stack: list[list] = []
        descend = True
        while True:
            if descend:
                if not self.primary:
                    return ([forced] if forced is not None else []) + chosen
                self.nodes += 1
                if self.deadline is not None and time.monotonic() > self.deadline:
                    raise SearchBudgetExceeded(f"gave up after {self.nodes} nodes")
                c = self.choose()
                stack.append([sorted(self.X[c]), 0, None])
            if not stack:
                return None
            frame = stack[-1]
            if frame[2] is not None:
                self.deselect(chosen.pop(), *frame[2])
                frame[2] = None
            if frame[1] == len(frame[0]):
                stack.pop()
                descend = False
                continue
            r = frame[0][frame[1]]
            frame[1] += 1
            frame[2] = self.select(r)
            chosen.append(r)
            descend = True


def _worker(args):
    prob, branching, deadline, r = args
    search = _Search(prob, branching, deadline)
    try:
        found = search.run(forced=r)
    except SearchBudgetExceeded:
        return r, "budget", search.nodes
    return r, found, search.nodes


def _run_parallel(prob: _CoverProblem, branching: str, deadline, threads: int, stats: SearchStats):
    root = _Search(prob, branching, deadline)
    stats.nodes += 1
    if not root.primary:
        return []
    c = root.choose()
    branches = sorted(root.X[c])
    if not branches:
        return None
    budget_hit = False
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=threads) as pool:
        tasks = [(prob, branching, deadline, r) for r in branches]
        for _, found, nodes in pool.imap_unordered(_worker, tasks):
            stats.nodes += nodes
            if found == "budget":
                budget_hit = True
            elif found is not None:
                pool.terminate()
                return found
    if budget_hit:
        raise SearchBudgetExceeded("a parallel branch exceeded the time budget")
    return None


def _certificate(P: CharPoset, prob: _CoverProblem, chosen: list[int]) -> PartitionCertificate:
    intervals = []
    covered = set()
    for r in chosen:
        F, G = prob.bounds[r]
        intervals.append(Interval(F, G))
        covered.update(prob.rows[r])
    for c, b in enumerate(prob.points):
        if c not in covered:
            intervals.append(Interval(b, b))
    intervals.sort(key=lambda iv: (lex_key(iv.F), lex_key(iv.G)))
    claimed = min(rho(iv.G, P.g) for iv in intervals)
    return PartitionCertificate(intervals, claimed, P.g, P.mode)


def partition_exists(
    P: CharPoset,
    s: int,
    *,
    branching: str = "mrv",
    reduced: bool = True,
    lp_prune: bool = True,
    threads: int = 1,
    time_budget_ms: float | None = None,
    stats: SearchStats | None = None,
) -> PartitionCertificate | None:
    """Find an interval partition of ``P`` with every ``rho(G) >= s``, if any."""
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    if len(P) == 0:
        raise EmptyPosetError("cannot partition an empty poset")
    stats = stats if stats is not None else SearchStats()
    stats.decision_calls += 1
    deadline = None if time_budget_ms is None else time.monotonic() + time_budget_ms / 1000.0
    prob = _build_problem(P, s, reduced)

    reachable = set()
    for cols in prob.rows:
        reachable.update(cols)
    if any(c not in reachable for c in prob.low):
        return None
    if lp_prune and _lp_refutes(prob):
        stats.lp_refutations += 1
        return None

    if threads > 1:
        chosen = _run_parallel(prob, branching, deadline, threads, stats)
    else:
        search = _Search(prob, branching, deadline)
        try:
            chosen = search.run()
        finally:
            stats.nodes += search.nodes
    if chosen is None:
        return None
    return _certificate(P, prob, chosen)


def rho_upper_bound(P: CharPoset) -> int:
    """Min over minimal members ``a`` of the best ``rho(G)`` with ``[a, G]`` inside ``P``.

    Every minimal member starts its own interval, so no partition beats this.
    """
    best_overall = P.n
    for a in minimal_members(P):
        best = -1
        for G in P.members:
            r = rho(G, P.g)
            if r <= best or any(x > y for x, y in zip(a, G)):
                continue
            if P.table[tuple(slice(x, y + 1) for x, y in zip(a, G))].all():
                best = r
        best_overall = min(best_overall, best)
    return best_overall


def sdepth_of_poset(P: CharPoset, *, stats: SearchStats | None = None, **options) -> tuple[int, PartitionCertificate]:
    """Largest ``s`` admitting a partition, with its certificate."""
    if len(P) == 0:
        raise EmptyPosetError("cannot partition an empty poset")
    stats = stats if stats is not None else SearchStats()
    for s in range(rho_upper_bound(P), -1, -1):
        cert = partition_exists(P, s, stats=stats, **options)
        if cert is not None:
            return cert.claimed_sdepth, cert
    raise AssertionError("singleton partition must exist at s = 0")


def sdepth_quotient(I: MonomialIdeal, g: Sequence[int] | None = None, **options) -> tuple[int, PartitionCertificate]:
    if I.is_zero:
        raise ValueError("S/(0) = S is not handled; pass a nonzero ideal")
    return sdepth_of_poset(build_quotient_poset(I, g), **options)


def sdepth_ideal(I: MonomialIdeal, g: Sequence[int] | None = None, **options) -> tuple[int, PartitionCertificate]:
    return sdepth_of_poset(build_ideal_poset(I, g), **options)


# ---------------------------------------------------------------------------
# independent checks


def brute_force_sdepth(P: CharPoset) -> int:
    """Best min-rho over *all* interval partitions, by plain enumeration.

    Shares nothing with the solver: every interval of ``P`` is a candidate and
    the first uncovered member may sit anywhere inside the interval chosen for it.
    """
    members = list(P.members)
    if not members:
        raise EmptyPosetError("cannot partition an empty poset")
    if len(members) > BRUTE_FORCE_CAP:
        raise ResourceError(f"{len(members)} members exceeds brute-force cap {BRUTE_FORCE_CAP}")
    pos = {a: i for i, a in enumerate(members)}
    intervals = []
    for F in members:
        for G in members:
            if all(x <= y for x, y in zip(F, G)):
                pts = list(itertools.product(*(range(x, y + 1) for x, y in zip(F, G))))
                if all(b in pos for b in pts):
                    mask = 0
                    for b in pts:
                        mask |= 1 << pos[b]
                    intervals.append((mask, rho(G, P.g)))
    full = (1 << len(members)) - 1
    best = -1

    def walk(covered: int, low: int) -> None:
        nonlocal best
        if low <= best:
            return
        if covered == full:
            best = low
            return
        free = ~covered & full
        first = free & -free
        for mask, r in intervals:
            if mask & first and not mask & covered:
                walk(covered | mask, min(low, r))

    walk(0, P.n + 1)
    return best


def certificate_problems(P: CharPoset, cert: PartitionCertificate) -> list[str]:
    """Every way ``cert`` fails to be a valid partition of ``P`` (empty if valid)."""
    problems = []
    if tuple(cert.g) != tuple(P.g):
        problems.append(f"bound {tuple(cert.g)} differs from poset bound {tuple(P.g)}")
        return problems
    if cert.mode is not P.mode:
        problems.append(f"mode {cert.mode.value} differs from poset mode {P.mode.value}")
    if not cert.intervals:
        problems.append("no intervals")
    counts = np.zeros(P.table.shape, dtype=np.int64)
    rhos = []
    for iv in cert.intervals:
        if len(iv.G) != P.n or not P.in_box(iv.G):
            problems.append(f"interval [{tuple(iv.F)}, {tuple(iv.G)}] leaves the box")
            continue
        sl = iv.slices()
        if not P.table[sl].all():
            problems.append(f"interval [{tuple(iv.F)}, {tuple(iv.G)}] contains non-members")
        counts[sl] += 1
        rhos.append(rho(iv.G, P.g))
    missing = int(np.count_nonzero(P.table & (counts == 0)))
    if missing:
        problems.append(f"{missing} members not covered")
    overlap = int(np.count_nonzero(counts > 1))
    if overlap:
        problems.append(f"{overlap} points covered more than once")
    if rhos and min(rhos) != cert.claimed_sdepth:
        problems.append(f"claimed sdepth {cert.claimed_sdepth} but min rho is {min(rhos)}")
    return problems


def validate_certificate(P: CharPoset, cert: PartitionCertificate) -> bool:
    return not certificate_problems(P, cert)
