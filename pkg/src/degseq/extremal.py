"""Degree-sum thresholds: closed forms, exact brute force, and audit harnesses.

sigma(H, n) is the least even l such that every graphic sequence of length n
with degree sum at least l admits a realization containing H.  Small n gets
exact values by full enumeration; large n is covered by the closed formula,
the lower-bound construction, and seeded sampling of the argument that proves
the formula.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .errors import (
    ConstraintViolationError,
    InfeasibleSigmaError,
    PreconditionUnmetError,
    WorkBoundExceededError,
)
from .graphs import (
    PatternSpec,
    SimpleGraph,
    build_removed_pattern,
    contains_subgraph,
    degree_sequence,
    extremal_construction,
)
from .potential import WorkBudget, is_potentially_subgraph
from .sequences import (
    DegreeSequence,
    EnumerationStats,
    enumerate_graphic_sequences,
    is_graphic,
    run_over_shards,
)

DEFAULT_WORK_BOUND = 10**7


def sigma_formula(r: int, k: int, t: int, n: int, *, strict: bool = False) -> int:
    """Closed-form threshold (r-1)(2n-r) - 2(n-r) for the removed-edges family.

    Relaxed mode evaluates the expression for any valid pattern with r >= 3
    and n >= r+1; callers probing below the proven range can consult
    PatternSpec.threshold_violations for what they are waiving.  Strict mode
    rejects any parameter outside the proven range.
    """
    spec = PatternSpec(r, k, t)
    if r < 3:
        raise ConstraintViolationError(f"formula needs r >= 3, got {r}")
    if n < r + 1:
        raise ConstraintViolationError(f"formula needs n >= r+1 = {r + 1}, got {n}")
    if strict:
        broken = spec.threshold_violations(n)
        if broken:
            raise ConstraintViolationError("strict mode: " + "; ".join(broken))
    return (r - 1) * (2 * n - r) - 2 * (n - r)


def lower_bound_sum(r: int, n: int) -> int:
    """Degree sum that already forces the pattern: (r-2)(n-1) + (r-2)(n-r+2) + 2.

    Two more than the sum of the blocking construction's degree sequence;
    algebraically equal to sigma_formula for every r >= 3, n >= r+1.
    """
    if r < 3:
        raise ConstraintViolationError(f"need r >= 3, got {r}")
    if n < r + 1:
        raise ConstraintViolationError(f"need n >= r+1 = {r + 1}, got {n}")
    return (r - 2) * (n - 1) + (r - 2) * (n - r + 2) + 2


@dataclass
class ThresholdReport:
    """Exact sigma(H, n) from full enumeration.

    Every graphic sequence of length n with sum >= threshold is potentially H;
    extremal_sequences are the non-potential sequences of sum threshold-2
    (empty only when the threshold degenerates to 2).  counts carries the
    enumerated/graphic/potential tallies.
    """

    pattern_label: str
    n: int
    threshold: int
    extremal_sequences: list[DegreeSequence]
    counts: dict[str, int]
    elapsed: float


def brute_force_sigma(
    pattern: SimpleGraph,
    n: int,
    *,
    pattern_label: str | None = None,
    exclude_zero_terms: bool = False,
    threads: int = 1,
    work_bound: int = DEFAULT_WORK_BOUND,
) -> ThresholdReport:
    """Compute sigma(pattern, n) exactly by deciding every graphic sequence.

    Shards the sequence space by leading entry; each shard owns a fresh work
    budget charged per sequence, per placement, and per completion node, so
    refusal above the bound does not depend on thread scheduling.  The merged
    extremal list is in decreasing lexicographic order.
    """
    if pattern.n > n:
        raise ConstraintViolationError(
            f"pattern has {pattern.n} vertices but sequences have length {n}"
        )
    space = math.comb(2 * n - 1, n)
    if space > work_bound:
        raise WorkBoundExceededError(
            f"candidate space at n={n} holds {space} sequences, above the bound {work_bound}"
        )
    label = pattern_label if pattern_label is not None else f"graph(n={pattern.n},m={pattern.edge_count})"
    start = time.perf_counter()

    def shard(d1: int):
        stats = EnumerationStats()
        budget = WorkBudget(work_bound)
        potential = 0
        best = -1
        best_seqs: list[DegreeSequence] = []
        for pi in enumerate_graphic_sequences(
            n, first_entry=d1, exclude_zero_terms=exclude_zero_terms, stats=stats
        ):
            budget.charge()
            if is_potentially_subgraph(pi, pattern, budget=budget).verdict:
                potential += 1
            elif pi.sigma > best:
                best = pi.sigma
                best_seqs = [pi]
            elif pi.sigma == best:
                best_seqs.append(pi)
        return stats, potential, best, best_seqs

    enumerated = graphic = potential = 0
    best = -1
    extremal: list[DegreeSequence] = []
    for stats, pot, shard_best, shard_seqs in run_over_shards(n, shard, threads):
        enumerated += stats.candidates
        graphic += stats.graphic
        potential += pot
        if shard_best > best:
            best = shard_best
            extremal = list(shard_seqs)
        elif shard_best == best and shard_best >= 0:
            extremal.extend(shard_seqs)
    threshold = best + 2 if best >= 0 else 2
    return ThresholdReport(
        pattern_label=label,
        n=n,
        threshold=threshold,
        extremal_sequences=extremal,
        counts={"enumerated": enumerated, "graphic": graphic, "potential": potential},
        elapsed=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class LowerBoundReport:
    """Checks that the blocking construction behaves as the threshold demands."""

    pattern_label: str
    n: int
    sequence: DegreeSequence
    sigma: int
    expected_sigma: int
    sequence_ok: bool  # degrees are ((n-1)^{r-2}, (r-2)^{n-r+2})
    pattern_absent: bool

    @property
    def ok(self) -> bool:
        return self.sequence_ok and self.pattern_absent and self.sigma == self.expected_sigma


def verify_lower_bound(spec: PatternSpec, n: int) -> LowerBoundReport:
    """Confirm the r-2 dominating vertices over an independent set block the pattern.

    Checks the construction's degree sequence shape, that it contains no copy
    of the pattern, and that its degree sum sits exactly two under the
    closed-form threshold.
    """
    g = extremal_construction(spec.r, n)
    pattern = build_removed_pattern(spec)
    pi = degree_sequence(g)
    r = spec.r
    expected = (n - 1,) * (r - 2) + (r - 2,) * (n - r + 2)
    return LowerBoundReport(
        pattern_label=spec.label(),
        n=n,
        sequence=pi,
        sigma=pi.sigma,
        expected_sigma=lower_bound_sum(r, n) - 2,
        sequence_ok=pi.entries == expected,
        pattern_absent=contains_subgraph(g, pattern) is None,
    )


def unique_realization_check(pi: DegreeSequence, *, max_n: int = 7) -> bool:
    """True when all labeled graphs realizing pi are pairwise isomorphic.

    Exhaustive: walks every edge set of the right size, keeps those whose
    degree multiset matches, and compares canonical forms (minimum edge
    bitmask over the degree-preserving relabelings).  Vacuously true for a
    non-graphic pi.
    """
    n = pi.n
    if n > max_n:
        raise WorkBoundExceededError(f"n={n} above the isomorphism-sweep guard {max_n}")
    if pi.sigma % 2:
        return True
    m = pi.sigma // 2
    pairs = list(combinations(range(n), 2))
    bit_of = {pair: 1 << i for i, pair in enumerate(pairs)}
    want = pi.entries

    def canonical(chosen: tuple[int, ...]) -> int:
        deg = [0] * n
        for i in chosen:
            u, v = pairs[i]
            deg[u] += 1
            deg[v] += 1
        # only relabelings that keep degrees sorted can attain the minimum
        by_degree: dict[int, list[int]] = {}
        for v in sorted(range(n), key=lambda v: (-deg[v], v)):
            by_degree.setdefault(deg[v], []).append(v)
        blocks = [by_degree[d] for d in sorted(by_degree, reverse=True)]
        starts = []
        pos = 0
        for block in blocks:
            starts.append(pos)
            pos += len(block)
        best = None
        edge_list = [pairs[i] for i in chosen]

        def assign(bi: int, relabel: dict[int, int]) -> None:
            nonlocal best
            if bi == len(blocks):
                mask = 0
                for u, v in edge_list:
                    a, b = relabel[u], relabel[v]
                    mask |= bit_of[(a, b) if a < b else (b, a)]
                if best is None or mask < best:
                    best = mask
                return
            block = blocks[bi]
            base = starts[bi]
            for perm in permutations(block):
                for offset, v in enumerate(perm):
                    relabel[v] = base + offset
                assign(bi + 1, relabel)
            return

        assign(0, {})
        assert best is not None
        return best

    seen: set[int] = set()
    for chosen in combinations(range(len(pairs)), m):
        deg = [0] * n
        for i in chosen:
            u, v = pairs[i]
            deg[u] += 1
            deg[v] += 1
        deg.sort(reverse=True)
        if tuple(deg) != want:
            continue
        seen.add(canonical(chosen))
        if len(seen) > 1:
            return False
    return True


def special_sequence(r: int, n: int) -> DegreeSequence:
    """The boundary sequence ((n-1)^{r-3}, (r-1)^{n-r+3})."""
    if r < 3:
        raise ConstraintViolationError(f"need r >= 3, got {r}")
    if n < r + 1:
        raise ConstraintViolationError(f"need n >= r+1 = {r + 1}, got {n}")
    return DegreeSequence((n - 1,) * (r - 3) + (r - 1,) * (n - r + 3))


@dataclass(frozen=True)
class ProofPathResult:
    """Which of the derived degree conditions a qualifying sequence satisfies.

    front: d_{r-2} >= r, rescued by equality with the boundary sequence;
    mid: d_r >= r-1; tail: d_{r+1} >= r-2; the branch dichotomy needs
    d_i >= 2r-i up to rank r-2 (prefix) or d_{2r+2} >= r-1 (deep).
    """

    sequence: DegreeSequence
    r: int
    is_special: bool
    front_ok: bool
    mid_ok: bool
    tail_ok: bool
    prefix_ok: bool
    deep_ok: bool

    @property
    def branch(self) -> str:
        if self.prefix_ok and self.deep_ok:
            return "both"
        if self.prefix_ok:
            return "prefix"
        if self.deep_ok:
            return "deep"
        return "none"

    @property
    def ok(self) -> bool:
        return self.front_ok and self.mid_ok and self.tail_ok and self.branch != "none"


def proof_path_check(pi: DegreeSequence, r: int) -> ProofPathResult:
    """Evaluate the derived degree conditions on one qualifying sequence.

    Preconditions (graphic, n >= 4r+10, degree sum at or above the closed-form
    threshold) are enforced; within them, any condition coming back false is a
    counterexample to the threshold argument and must be surfaced.
    """
    n = pi.n
    floor = 4 * r + 10
    if not is_graphic(pi):
        raise PreconditionUnmetError("sequence is not graphic")
    if n < floor:
        raise PreconditionUnmetError(f"need n >= 4r+10 = {floor}, got {n}")
    threshold = sigma_formula(r, 1, 1, n)
    if pi.sigma < threshold:
        raise PreconditionUnmetError(f"degree sum {pi.sigma} below threshold {threshold}")
    e = pi.entries
    is_special = e == special_sequence(r, n).entries
    return ProofPathResult(
        sequence=pi,
        r=r,
        is_special=is_special,
        front_ok=e[r - 3] >= r or is_special,
        mid_ok=e[r - 1] >= r - 1,
        tail_ok=e[r] >= r - 2,
        prefix_ok=all(e[i - 1] >= 2 * r - i for i in range(1, r - 1)),
        deep_ok=e[2 * r + 1] >= r - 1,
    )


@dataclass
class ProofPathAuditReport:
    """Seeded sweep of proof_path_check plus the explicit boundary-sequence case."""

    r: int
    n: int
    samples: int
    seed: int
    checked: int = 0
    special_ok: bool = False
    failures: list[ProofPathResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.special_ok and not self.failures


def proof_path_audit(r: int, n: int, samples: int, seed: int) -> ProofPathAuditReport:
    """Run proof_path_check over seeded qualifying samples; collect violations."""
    threshold = sigma_formula(r, 1, 1, n, strict=True)
    report = ProofPathAuditReport(r=r, n=n, samples=samples, seed=seed)
    boundary = proof_path_check(special_sequence(r, n), r)
    report.special_ok = boundary.ok and boundary.is_special and boundary.sequence[r - 3] < r
    for pi in sample_graphic_sequences(n, threshold, samples, seed):
        result = proof_path_check(pi, r)
        report.checked += 1
        if not result.ok:
            report.failures.append(result)
    return report


def sample_graphic_sequences(n: int, min_sigma: int, count: int, seed: int) -> list[DegreeSequence]:
    """Degree sequences of seeded random labeled graphs with sum >= min_sigma.

    The edge count m is drawn uniformly from [ceil(min_sigma/2), C(n,2)] and
    then an m-subset of the vertex pairs uniformly, so every sample is graphic
    by construction and runs are reproducible per seed.
    """
    if n < 2:
        raise ConstraintViolationError(f"need n >= 2, got {n}")
    if count < 0:
        raise ValueError("need count >= 0")
    if min_sigma > n * (n - 1):
        raise InfeasibleSigmaError(
            f"degree sums at n={n} cannot exceed {n * (n - 1)}, asked for {min_sigma}"
        )
    total_pairs = n * (n - 1) // 2
    lo = max(0, (min_sigma + 1) // 2)
    pairs = list(combinations(range(n), 2))
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.randint(lo, total_pairs)
        deg = [0] * n
        for i in rng.sample(range(total_pairs), m):
            u, v = pairs[i]
            deg[u] += 1
            deg[v] += 1
        deg.sort(reverse=True)
        out.append(DegreeSequence(tuple(deg)))
    return out
