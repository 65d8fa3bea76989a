"""Exact decisions: can some realization of a sequence carry a given pattern?

A sequence pi is potentially-H if at least one simple graph realizing pi
contains H as an ordinary subgraph.  The search places H's vertices on the
positions carrying the largest degrees (any witness can be relabelled into
that form, see top_placement), tries every degree-compatible assignment, and
for each asks whether the forced edge set extends to a full realization.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from .errors import (
    ConstraintViolationError,
    DemandExceededError,
    NotPotentialError,
    SideConditionUnmetError,
    WorkBoundExceededError,
)
from .graphs import PatternSpec, SimpleGraph, build_removed_pattern, complete
from .sequences import (
    DegreeSequence,
    _graphic_desc,
    enumerate_graphic_sequences,
    is_graphic,
    run_over_shards,
)

NOTE_NOT_GRAPHIC = "not graphic"
NOTE_PATTERN_TOO_LARGE = "pattern larger than host"


@dataclass
class WorkBudget:
    """Node allowance for the backtracking searches; charge() raises when spent."""

    limit: int
    used: int = 0

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise WorkBoundExceededError(f"search exceeded {self.limit} nodes")


@dataclass(frozen=True)
class Placement:
    """Host positions chosen for a pattern, with the vertex assignment onto them.

    The degrees at positions always form the multiset of the |pattern| largest
    entries of the host sequence.
    """

    positions: tuple[int, ...]
    assignment: tuple[tuple[int, int], ...]  # (pattern vertex, host position), sorted

    def as_dict(self) -> dict[int, int]:
        return dict(self.assignment)


@dataclass(frozen=True)
class PotentialDecision:
    """Outcome of a potentially-subgraph query.

    verdict False means no realization at all contains the pattern.  On True,
    witness realizes the queried sequence positionally and embedding maps each
    pattern vertex to a witness vertex.
    """

    verdict: bool
    witness: SimpleGraph | None = None
    embedding: dict[int, int] | None = None
    note: str | None = None


def top_placement(pi: DegreeSequence, h: int) -> tuple[int, ...]:
    """Canonical position set carrying the h largest entries: the leading block.

    Any position set whose degree multiset equals the top-h multiset differs
    from the leading block only in which equal-valued positions it takes, and
    permuting equal demands relabels witnesses between the two choices, so
    searching the leading block alone loses nothing.
    """
    return tuple(range(h))


def complete_with_forced_edges(
    pi: DegreeSequence,
    forced: Iterator[tuple[int, int]] | list[tuple[int, int]],
    *,
    budget: WorkBudget | None = None,
) -> SimpleGraph | None:
    """Find a graph with degree(v_i) = pi[i] for every i whose edges include `forced`.

    Exact backtracking: each step fully saturates the vertex whose remaining
    demand has the fewest spare candidates, branching over the combinations of
    partners; a node is cut when the sorted residual demands are not graphic
    (added edges alone must form a simple graph with exactly those degrees).
    Returns None when no completion exists.  Raises DemandExceededError if the
    forced edges already overshoot some demand.
    """
    n = pi.n
    adj = [0] * n
    for u, v in forced:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"forced edge ({u},{v}) invalid for n={n}")
        if adj[u] >> v & 1:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    residual = [pi.entries[v] - adj[v].bit_count() for v in range(n)]
    for v, r in enumerate(residual):
        if r < 0:
            raise DemandExceededError(
                f"forced degree {adj[v].bit_count()} at position {v} exceeds demand {pi.entries[v]}"
            )
    if sum(residual) % 2:
        return None
    if _saturate(adj, residual, budget):
        return SimpleGraph(n, tuple(adj))
    return None


def _saturate(adj: list[int], residual: list[int], budget: WorkBudget | None) -> bool:
    if budget is not None:
        budget.charge()
    active = [v for v, r in enumerate(residual) if r > 0]
    if not active:
        return True
    if not _graphic_desc(sorted(residual, reverse=True)):
        return False
    pick = -1
    pick_cands: list[int] = []
    pick_slack = None
    for u in active:
        cands = [v for v in active if v != u and not adj[u] >> v & 1]
        slack = len(cands) - residual[u]
        if slack < 0:
            return False
        if pick_slack is None or slack < pick_slack:
            pick, pick_cands, pick_slack = u, cands, slack
            if slack == 0:
                break
    u = pick
    pick_cands.sort(key=lambda v: (-residual[v], v))
    need = residual[u]
    for group in combinations(pick_cands, need):
        for v in group:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            residual[v] -= 1
        residual[u] = 0
        if _saturate(adj, residual, budget):
            return True
        residual[u] = need
        for v in group:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            residual[v] += 1
    return False


def _placements(pi: DegreeSequence, pattern: SimpleGraph, extra=None) -> Iterator[Placement]:
    """Degree-compatible assignments of pattern vertices onto the leading block."""
    h = pattern.n
    positions = top_placement(pi, h)
    entries = pi.entries
    pdeg = pattern.degrees()
    order = sorted(range(h), key=lambda u: (-pdeg[u], u))
    assign: dict[int, int] = {}
    used = [False] * h

    def walk(i: int) -> Iterator[Placement]:
        if i == h:
            if extra is None or extra(assign):
                yield Placement(positions, tuple(sorted(assign.items())))
            return
        u = order[i]
        for p in range(h):
            if used[p] or entries[p] < pdeg[u]:
                continue
            used[p] = True
            assign[u] = p
            yield from walk(i + 1)
            used[p] = False
            del assign[u]

    yield from walk(0)


def is_potentially_subgraph(
    pi: DegreeSequence, pattern: SimpleGraph, *, budget: WorkBudget | None = None
) -> PotentialDecision:
    """Decide whether some realization of pi contains the pattern as a subgraph.

    Exact: a False verdict means no realization contains it.  Non-graphic
    input gives verdict False with a distinguished note.  The embedded pattern
    is searched on the leading positions only, which is complete because a
    witness with the pattern anywhere can be rebuilt with the pattern's
    vertices on the largest degrees.
    """
    if not is_graphic(pi):
        return PotentialDecision(False, note=NOTE_NOT_GRAPHIC)
    h = pattern.n
    if h > pi.n:
        return PotentialDecision(False, note=NOTE_PATTERN_TOO_LARGE)
    want = sorted(pattern.degrees(), reverse=True)
    if any(pi.entries[i] < want[i] for i in range(h)):
        return PotentialDecision(False)
    edges = pattern.edges()
    for placement in _placements(pi, pattern):
        if budget is not None:
            budget.charge()
        lookup = placement.as_dict()
        forced = [(lookup[u], lookup[v]) for u, v in edges]
        witness = complete_with_forced_edges(pi, forced, budget=budget)
        if witness is not None:
            return PotentialDecision(True, witness=witness, embedding=lookup)
    return PotentialDecision(False)


def is_potentially_clique_on_top(
    pi: DegreeSequence, r: int, *, budget: WorkBudget | None = None
) -> PotentialDecision:
    """Decide whether some realization has all edges among r+1 positions of largest degree."""
    if r < 1:
        raise ConstraintViolationError(f"need r >= 1, got {r}")
    if pi.n < r + 1:
        raise ConstraintViolationError(f"need n >= r+1 = {r + 1}, got {pi.n}")
    return is_potentially_subgraph(pi, complete(r + 1), budget=budget)


def _missing_pair(pattern: SimpleGraph) -> tuple[int, int]:
    for u in range(pattern.n):
        for v in range(u + 1, pattern.n):
            if not pattern.has_edge(u, v):
                return (u, v)
    raise ValueError("pattern is complete")


def realization_with_pattern_on_top(
    pi: DegreeSequence, pattern: SimpleGraph, *, budget: WorkBudget | None = None
) -> SimpleGraph:
    """Witness whose leading |pattern| positions carry the embedded pattern.

    For a pattern that is a complete graph short one edge, the missing edge is
    additionally pinned between the last two of those positions.  Raises
    NotPotentialError when pi is not graphic or no realization contains the
    pattern.
    """
    if not is_graphic(pi):
        raise NotPotentialError(NOTE_NOT_GRAPHIC)
    h = pattern.n
    if h > pi.n:
        raise NotPotentialError(NOTE_PATTERN_TOO_LARGE)
    want = sorted(pattern.degrees(), reverse=True)
    if any(pi.entries[i] < want[i] for i in range(h)):
        raise NotPotentialError("degrees cannot host the pattern")
    extra = None
    if pattern.edge_count == h * (h - 1) // 2 - 1:
        a, b = _missing_pair(pattern)
        tail = {h - 2, h - 1}
        extra = lambda assign: {assign[a], assign[b]} == tail
    edges = pattern.edges()
    for placement in _placements(pi, pattern, extra):
        if budget is not None:
            budget.charge()
        lookup = placement.as_dict()
        forced = [(lookup[u], lookup[v]) for u, v in edges]
        witness = complete_with_forced_edges(pi, forced, budget=budget)
        if witness is not None:
            return witness
    raise NotPotentialError("no realization carries the pattern")


@dataclass(frozen=True)
class _Condition:
    min_r: int
    floor: Callable[[int], int]
    hypothesis: Callable[[tuple[int, ...], int], bool]
    kind: str  # "clique" | "minus-edge" | "minus-path"


def _prefix_tall(e: tuple[int, ...], r: int, upto: int) -> bool:
    # rank i must reach 2r - i for every i = 1..upto
    return all(e[i - 1] >= 2 * r - i for i in range(1, upto + 1))


# Registered sufficient conditions: each pairs a purely arithmetic hypothesis
# on the sorted degrees with a conclusion decided by the exact engine.  Ranks
# in comments are 1-based.
_CONDITIONS: dict[str, _Condition] = {
    # d_{r+1} >= r and d_i >= 2r-i for i <= r-1  =>  clique on top
    "thm2.1": _Condition(2, lambda r: r + 1, lambda e, r: e[r] >= r and _prefix_tall(e, r, r - 1), "clique"),
    # d_{r+1} >= r and d_{2r+2} >= r-1  =>  clique on top
    "thm2.2": _Condition(2, lambda r: 2 * r + 2, lambda e, r: e[r] >= r and e[2 * r + 1] >= r - 1, "clique"),
    # d_{r+1} >= r-1 and d_i >= 2r-i for i <= r-1  =>  complete minus an edge
    "thm2.3": _Condition(2, lambda r: r + 1, lambda e, r: e[r] >= r - 1 and _prefix_tall(e, r, r - 1), "minus-edge"),
    # d_{r-1} >= r and d_{2r+2} >= r-1  =>  complete minus an edge
    "thm2.4": _Condition(2, lambda r: 2 * r + 2, lambda e, r: e[r - 2] >= r and e[2 * r + 1] >= r - 1, "minus-edge"),
    # d_r >= r-1, d_{r+1} >= r-2 and d_i >= 2r-i for i <= r-2  =>  complete minus a 2-edge path
    "lemma2.2": _Condition(
        2,
        lambda r: r + 1,
        lambda e, r: e[r - 1] >= r - 1 and e[r] >= r - 2 and _prefix_tall(e, r, r - 2),
        "minus-path",
    ),
    # d_{r-2} >= r and d_{2r+2} >= r-1  =>  complete minus a 2-edge path
    "lemma2.3": _Condition(3, lambda r: 2 * r + 2, lambda e, r: e[r - 3] >= r and e[2 * r + 1] >= r - 1, "minus-path"),
}

CONDITION_IDS = tuple(sorted(_CONDITIONS))


def _condition(condition_id: str, r: int, n: int) -> _Condition:
    try:
        cond = _CONDITIONS[condition_id]
    except KeyError:
        raise ValueError(f"unknown condition id {condition_id!r}; known: {', '.join(CONDITION_IDS)}") from None
    if r < cond.min_r:
        raise ConstraintViolationError(f"{condition_id} needs r >= {cond.min_r}, got {r}")
    if n < cond.floor(r):
        raise SideConditionUnmetError(f"{condition_id} needs n >= {cond.floor(r)}, got {n}")
    return cond


def hypothesis_check(condition_id: str, pi: DegreeSequence, r: int) -> bool:
    """Evaluate a registered condition's degree hypothesis on pi (assumed graphic)."""
    cond = _condition(condition_id, r, pi.n)
    return bool(cond.hypothesis(pi.entries, r))


def conclusion_check(
    condition_id: str, pi: DegreeSequence, r: int, *, budget: WorkBudget | None = None
) -> bool:
    """Decide a registered condition's conclusion exactly (no shortcut via the hypothesis)."""
    cond = _condition(condition_id, r, pi.n)
    if cond.kind == "clique":
        return is_potentially_clique_on_top(pi, r, budget=budget).verdict
    if cond.kind == "minus-edge":
        pattern = build_removed_pattern(PatternSpec(r, 0, 1))
    else:
        pattern = build_removed_pattern(PatternSpec(r, 1, 0))
    return is_potentially_subgraph(pi, pattern, budget=budget).verdict


@dataclass
class ConditionAuditReport:
    """Exhaustive hypothesis-implies-conclusion sweep over all graphic sequences of one length."""

    condition_id: str
    r: int
    n: int
    sequences: int = 0
    hypothesis_holds: int = 0
    counterexamples: list[DegreeSequence] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def condition_audit(
    condition_id: str,
    r: int,
    n: int,
    *,
    threads: int = 1,
    work_bound: int | None = None,
) -> ConditionAuditReport:
    """Check one registered condition against every graphic sequence of length n."""
    _condition(condition_id, r, n)
    report = ConditionAuditReport(condition_id, r, n)

    def shard(d1: int):
        seqs = 0
        hyp = 0
        bad = []
        budget = WorkBudget(work_bound) if work_bound is not None else None
        for pi in enumerate_graphic_sequences(n, first_entry=d1):
            seqs += 1
            if not hypothesis_check(condition_id, pi, r):
                continue
            hyp += 1
            if not conclusion_check(condition_id, pi, r, budget=budget):
                bad.append(pi)
        return seqs, hyp, bad

    for seqs, hyp, bad in run_over_shards(n, shard, threads):
        report.sequences += seqs
        report.hypothesis_holds += hyp
        report.counterexamples.extend(bad)
    return report
