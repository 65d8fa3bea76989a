"""Degree-sequence arithmetic: graphicality, layoff recursion, realization, enumeration.

Sequences are immutable value objects: non-increasing tuples of vertex degrees
with entries in [0, n-1].  Layoff positions follow the usual 1-based statement
of the recursion; graph vertices everywhere else in the package are 0-based.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, TypeVar

from .errors import (
    EntryTooLargeError,
    LayoffIndexError,
    NegativeEntryError,
    ResultNegativeError,
)

T = TypeVar("T")


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing sequence of vertex degrees."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        cap = len(self.entries) - 1
        prev = None
        for d in self.entries:
            if d < 0:
                raise NegativeEntryError(f"negative degree {d}")
            if d > cap:
                raise EntryTooLargeError(f"degree {d} exceeds n-1={cap}")
            if prev is not None and d > prev:
                raise ValueError("entries must be non-increasing; use normalize()")
            prev = d

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def sigma(self) -> int:
        """Sum of the entries."""
        return sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.entries)


def normalize(raw: Iterable[int]) -> DegreeSequence:
    """Sort raw degrees into a valid DegreeSequence.

    Out-of-order input is accepted and sorted; negative entries raise
    NegativeEntryError and entries above n-1 raise EntryTooLargeError.
    """
    values = list(raw)
    cap = len(values) - 1
    for d in values:
        if d < 0:
            raise NegativeEntryError(f"negative degree {d}")
        if d > cap:
            raise EntryTooLargeError(f"degree {d} exceeds n-1={cap}")
    values.sort(reverse=True)
    return DegreeSequence(tuple(values))


def parse_sequence(text: str) -> DegreeSequence:
    """Parse the comma-separated text form, e.g. "3,3,2,2" (whitespace ignored)."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty degree sequence")
    try:
        values = [int(part.strip()) for part in stripped.split(",")]
    except ValueError:
        raise ValueError(f"malformed degree sequence: {text!r}") from None
    return normalize(values)


def format_sequence(seq: DegreeSequence) -> str:
    return str(seq)


def _graphic_desc(d) -> bool:
    # Erdos-Gallai test on an already non-increasing sequence of nonnegative
    # ints.  Odd total is simply non-graphic (the predicate is total).
    if sum(d) % 2:
        return False
    n = len(d)
    prefix = 0
    for t in range(1, n):
        prefix += d[t - 1]
        bound = t * (t - 1)
        for j in range(t, n):
            dj = d[j]
            bound += dj if dj < t else t
        if prefix > bound:
            return False
    return True


def is_graphic(pi: DegreeSequence) -> bool:
    """True iff some simple graph realizes pi."""
    return _graphic_desc(pi.entries)


def erdos_gallai_margins(pi: DegreeSequence) -> list[int]:
    """Slack of each aggregate degree inequality, at every cut t in 1..n-1.

    Entry t-1 holds t(t-1) + sum_{j>t} min(t, d_j) - sum_{i<=t} d_i; the
    sequence is graphic iff the sum is even and no margin is negative.
    """
    d = pi.entries
    n = len(d)
    margins = []
    prefix = 0
    for t in range(1, n):
        prefix += d[t - 1]
        bound = t * (t - 1)
        for j in range(t, n):
            dj = d[j]
            bound += dj if dj < t else t
        margins.append(bound - prefix)
    return margins


def layoff(pi: DegreeSequence, k: int) -> DegreeSequence:
    """Remove the vertex at 1-based position k and discharge its degree.

    With d_k >= k the d_k largest remaining demands other than position k are
    decremented (positions 1..k-1 and k+1..d_k+1); with d_k < k the first d_k
    positions are decremented.  The survivors are re-sorted.  The result is
    graphic iff the input is.

    Raises LayoffIndexError for k outside 1..n, ResultNegativeError if an
    entry would drop below zero, and EntryTooLargeError if a surviving entry
    exceeds the shorter sequence's range; either defect certifies the input
    was not graphic to begin with.
    """
    n = pi.n
    if not 1 <= k <= n:
        raise LayoffIndexError(f"position {k} outside 1..{n}")
    d = pi.entries
    dk = d[k - 1]
    out = []
    if dk >= k:
        for pos in range(1, n + 1):
            if pos == k:
                continue
            v = d[pos - 1]
            if pos <= k - 1 or pos <= dk + 1:
                v -= 1
            out.append(v)
    else:
        for pos in range(1, n + 1):
            if pos == k:
                continue
            v = d[pos - 1]
            if pos <= dk:
                v -= 1
            out.append(v)
    if any(v < 0 for v in out):
        raise ResultNegativeError(f"laying off position {k} of {pi} drops an entry below zero")
    out.sort(reverse=True)
    return DegreeSequence(tuple(out))


def havel_hakimi_realize(pi: DegreeSequence):
    """Build one realization by repeatedly laying off the largest demand.

    Returns a SimpleGraph whose vertex i has degree pi[i] exactly, or None if
    pi is not graphic.
    """
    from .graphs import SimpleGraph

    if not _graphic_desc(pi.entries):
        return None
    n = pi.n
    residual = list(pi.entries)
    adj = [0] * n
    active = list(range(n))
    while active:
        active.sort(key=lambda v: (-residual[v], v))
        u = active[0]
        need = residual[u]
        if need == 0:
            break
        targets = active[1 : 1 + need]
        if len(targets) < need or residual[targets[-1]] == 0:
            return None  # cannot happen for graphic input
        for v in targets:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            residual[v] -= 1
        residual[u] = 0
        active.pop(0)
    return SimpleGraph(n, tuple(adj))


@dataclass
class EnumerationStats:
    """Tallies filled in by enumerate_graphic_sequences."""

    candidates: int = 0  # completed length-n candidates submitted to the final test
    graphic: int = 0  # candidates that passed it


def enumerate_graphic_sequences(
    n: int,
    min_sigma: int | None = None,
    *,
    first_entry: int | None = None,
    exclude_zero_terms: bool = False,
    stats: EnumerationStats | None = None,
) -> Iterator[DegreeSequence]:
    """Yield every graphic sequence of length n in decreasing lexicographic order.

    Candidates are generated as non-increasing tuples capped at n-1, pruning
    subtrees whose running aggregate-degree bound or reachable sum already
    fails; survivors get the full graphicality test.  min_sigma keeps only
    sequences with at least that sum, exclude_zero_terms drops sequences with
    a zero entry, and first_entry pins d_1 (the sharding hook: the shards for
    d_1 = n-1 .. 0 partition the full space in order).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    floor = 1 if exclude_zero_terms else 0
    target = 0 if min_sigma is None else min_sigma
    prefix: list[int] = []

    def walk(pos: int, cap: int, acc: int) -> Iterator[DegreeSequence]:
        if pos == n:
            if stats is not None:
                stats.candidates += 1
            if acc >= target and _graphic_desc(prefix):
                if stats is not None:
                    stats.graphic += 1
                yield DegreeSequence(tuple(prefix))
            return
        lo = floor
        hi = cap
        if pos == 0 and first_entry is not None:
            if first_entry < lo or first_entry > hi:
                return
            lo = hi = first_entry
        for d in range(hi, lo - 1, -1):
            if acc + d * (n - pos) < target:
                break  # smaller d only shrinks the reachable sum
            prefix.append(d)
            t = pos + 1
            # optimistic aggregate bound: future entries contribute at most
            # min(t, d) each, so a prefix violating this can never recover
            if acc + d <= t * (t - 1) + (n - t) * min(t, d):
                yield from walk(pos + 1, d, acc + d)
            prefix.pop()

    yield from walk(0, n - 1, 0)


def candidate_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """All non-increasing tuples of length n with entries in [0, n-1], lex-decreasing.

    The raw candidate space behind the enumeration and the oracle sweeps;
    includes non-graphic sequences.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    prefix: list[int] = []

    def walk(pos: int, cap: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(prefix)
            return
        for d in range(cap, -1, -1):
            prefix.append(d)
            yield from walk(pos + 1, d)
            prefix.pop()

    yield from walk(0, n - 1)


def run_over_shards(n: int, shard_fn: Callable[[int], T], threads: int = 1) -> list[T]:
    """Apply shard_fn to every d_1 shard (n-1 down to 0) and return results in shard order.

    The order-preserving merge keeps downstream reports identical for any
    worker count.
    """
    if threads < 1:
        raise ValueError("need threads >= 1")
    shards = list(range(n - 1, -1, -1)) if n > 1 else [0]
    if threads == 1:
        return [shard_fn(d1) for d1 in shards]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(shard_fn, shards))
