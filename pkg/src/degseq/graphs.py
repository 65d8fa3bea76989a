"""Simple labeled graphs: bitmask adjacency, graph algebra, pattern builders, subgraph search.

Vertices are 0-based ints in the library; the text format and the CLI print
1-based labels.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ConstraintViolationError
from .sequences import DegreeSequence


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph; adj[v] is the neighbour bitmask of vertex v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative vertex count")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, mask in enumerate(self.adj):
            m = mask
            while m:
                u = (m & -m).bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
                m &= m - 1

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self.adj]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        m = self.adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            yield u
            m &= m - 1

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                v = (m & -m).bit_length() - 1
                out.append((u, v))
                m &= m - 1
        return out


@dataclass(frozen=True)
class PatternSpec:
    """Parameters (r, k, t) of the removed-edges pattern family.

    The pattern is the complete graph on r+1 vertices with k vertex-disjoint
    two-edge paths and t further disjoint edges deleted, so it needs
    r+1 >= 3k+2t carrier vertices.  Values outside the closed-form
    threshold's proven range are allowed here for cross-checks;
    threshold_violations reports which range constraints an (r,k,t,n)
    combination breaks.
    """

    r: int
    k: int
    t: int

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ConstraintViolationError(f"need r >= 2, got {self.r}")
        if self.k < 0 or self.t < 0:
            raise ConstraintViolationError("need k >= 0 and t >= 0")
        if 3 * self.k + 2 * self.t > self.r + 1:
            raise ConstraintViolationError(
                f"removed subgraph needs {3 * self.k + 2 * self.t} vertices "
                f"but the pattern has only {self.r + 1}"
            )

    @property
    def removed_vertex_count(self) -> int:
        return 3 * self.k + 2 * self.t

    def label(self) -> str:
        return f"K{self.r + 1}-({self.k}P2+{self.t}K2)"

    def threshold_violations(self, n: int) -> list[str]:
        """Constraints of the proven threshold range that (r,k,t,n) breaks."""
        out = []
        if self.k < 1:
            out.append("k >= 1")
        if self.k + self.t < 2:
            out.append("k + t >= 2")
        if 3 * self.k + 2 * self.t > self.r + 1:
            out.append("r + 1 >= 3k + 2t")
        if self.r < 4:
            out.append("r >= 4")
        if n < 4 * self.r + 10:
            out.append(f"n >= 4r + 10 = {4 * self.r + 10}")
        return out


def complete(m: int) -> SimpleGraph:
    """Complete graph on m vertices."""
    if m < 0:
        raise ValueError("negative vertex count")
    full = (1 << m) - 1
    return SimpleGraph(m, tuple(full & ~(1 << v) for v in range(m)))


def complement(g: SimpleGraph) -> SimpleGraph:
    full = (1 << g.n) - 1
    return SimpleGraph(g.n, tuple(full & ~mask & ~(1 << v) for v, mask in enumerate(g.adj)))


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """g and h side by side; h's vertices are shifted up by g.n."""
    adj = list(g.adj) + [mask << g.n for mask in h.adj]
    return SimpleGraph(g.n + h.n, tuple(adj))


def join(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Disjoint union plus every edge between the two sides."""
    g_side = (1 << g.n) - 1
    h_side = ((1 << h.n) - 1) << g.n
    adj = [mask | h_side for mask in g.adj]
    adj += [(mask << g.n) | g_side for mask in h.adj]
    return SimpleGraph(g.n + h.n, tuple(adj))


def path_graph(k: int) -> SimpleGraph:
    """Path with k edges (k+1 vertices)."""
    if k < 0:
        raise ValueError("negative edge count")
    return SimpleGraph.from_edges(k + 1, [(i, i + 1) for i in range(k)])


def cycle_graph(k: int) -> SimpleGraph:
    """Cycle on k vertices."""
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def build_removed_pattern(spec: PatternSpec) -> SimpleGraph:
    """Complete graph on r+1 vertices minus k disjoint 2-edge paths and t disjoint edges.

    The deletions sit on the highest-labelled vertices so the pattern's degrees
    are non-increasing by label: untouched vertices (degree r) first, then the
    2k+2t path/edge endpoints (degree r-1), then the k path centres (degree
    r-2).  With t >= 1 the last removed plain edge joins the two endpoints
    just before the centres, so for k=0, t=1 the missing edge of the
    one-short-of-complete pattern lies between the final two vertices.
    """
    r, k, t = spec.r, spec.k, spec.t
    m = r + 1
    untouched = m - spec.removed_vertex_count
    adj = list(complete(m).adj)

    def drop(u: int, v: int) -> None:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)

    centre_base = untouched + 2 * k + 2 * t
    for i in range(k):
        a = untouched + 2 * i
        b = a + 1
        c = centre_base + i
        drop(a, c)
        drop(b, c)
    for j in range(t):
        p = untouched + 2 * k + 2 * j
        drop(p, p + 1)
    return SimpleGraph(m, tuple(adj))


def extremal_construction(r: int, n: int) -> SimpleGraph:
    """Join of a complete graph on r-2 vertices with n-r+2 isolated vertices.

    Degrees are (n-1) on the complete side and r-2 on the independent side;
    this is the construction whose degree sum sits two below the threshold.
    """
    if r < 3:
        raise ConstraintViolationError(f"need r >= 3, got {r}")
    if n < r + 1:
        raise ConstraintViolationError(f"need n >= r+1 = {r + 1}, got {n}")
    independent = SimpleGraph(n - r + 2, (0,) * (n - r + 2))
    return join(complete(r - 2), independent)


def degree_sequence(g: SimpleGraph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(g.degrees(), reverse=True)))


def contains_subgraph(g: SimpleGraph, h: SimpleGraph):
    """Find h as an ordinary (not induced) subgraph of g.

    Returns an injective vertex map {pattern vertex: host vertex} or None.
    Backtracking assigns pattern vertices in descending-degree order, filtering
    hosts by degree and by adjacency to already-placed pattern neighbours; host
    candidates are tried in ascending index so the result is deterministic.
    """
    if h.n > g.n:
        return None
    order = sorted(range(h.n), key=lambda u: (-h.degree(u), u))
    gdeg = g.degrees()
    hdeg = h.degrees()
    assignment: dict[int, int] = {}
    full = (1 << g.n) - 1

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        cand = full & ~used
        for w in order[:i]:
            if h.adj[u] >> w & 1:
                cand &= g.adj[assignment[w]]
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if gdeg[v] < hdeg[u]:
                continue
            assignment[u] = v
            if place(i + 1, used | 1 << v):
                return True
            del assignment[u]
        return False

    if place(0, 0):
        return dict(sorted(assignment.items()))
    return None


def format_graph(g: SimpleGraph) -> str:
    """Text form: "n m" then one "u v" line per edge, 1-based, u < v, sorted."""
    lines = [f"{g.n} {g.edge_count}"]
    for u, v in g.edges():
        lines.append(f"{u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    """Parse the text form; '#' lines are comments."""
    rows = [line.strip() for line in text.splitlines()]
    rows = [r for r in rows if r and not r.startswith("#")]
    if not rows:
        raise ValueError("empty graph text")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"expected 'n m' header, got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header announces {m} edges but {len(rows) - 1} lines follow")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' edge line, got {row!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u < v <= n):
            raise ValueError(f"edge ({u},{v}) must satisfy 1 <= u < v <= {n}")
        if (u - 1, v - 1) in edges:
            raise ValueError(f"duplicate edge ({u},{v})")
        edges.append((u - 1, v - 1))
    return SimpleGraph.from_edges(n, edges)


def degree_sequence_census(n: int) -> set[tuple[int, ...]]:
    """Degree sequences of every labeled simple graph on n vertices.

    Exhaustive sweep over all 2^(n(n-1)/2) edge subsets; the enumeration-side
    oracle for the graphicality test.  Feasible up to n = 8 or so.
    """
    if n < 0:
        raise ValueError("negative vertex count")
    if n == 0:
        return {()}
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    inc = [0] * n
    for b, (i, j) in enumerate(pairs):
        inc[i] |= 1 << b
        inc[j] |= 1 << b
    out: set[tuple[int, ...]] = set()
    add = out.add
    for mask in range(1 << len(pairs)):
        add(tuple(sorted(((mask & iv).bit_count() for iv in inc), reverse=True)))
    return out
