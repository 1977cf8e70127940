"""Bitset-backed simple undirected graphs.

Vertices are labeled 0..n-1 and every neighborhood is stored as a Python
int used as a bitset, which keeps the subset arithmetic underneath the
solvers (intersection, complement, popcount) cheap and allocation-free.

Graphs and vertex sets are immutable after construction and safe to
share across threads. Constructors validate adjacency symmetry and the
absence of self-loops, so every reachable ``Graph`` is well formed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "DEFAULT_SEED",
    "PAIRING_RESAMPLE_BUDGET",
    "DegreeSummary",
    "Graph",
    "VertexSet",
    "complement",
    "complete",
    "cycle",
    "degree_summary",
    "empty",
    "from_edge_list",
    "from_spec",
    "hypercube",
    "is_connected",
    "path",
    "random_graph",
    "random_regular",
    "star",
]

# Documented default so bare invocations are reproducible.
DEFAULT_SEED = 1729

# Attempts allowed to the pairing model before giving up.
PAIRING_RESAMPLE_BUDGET = 10_000


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices 0..n-1 of an ambient graph, as a bitset."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ambient vertex count must be at least 1")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bitset mentions vertices outside 0..{self.n - 1}")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside 0..{n - 1}")
            bits |= 1 << v
        return cls(n, bits)

    def vertices(self) -> tuple[int, ...]:
        return tuple(self)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) ^ self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {{{', '.join(map(str, self))}}})"


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbor bitset of vertex ``v``. The edge count
    ``m`` and the per-vertex ``degrees`` are derived once here and then
    shared by everything downstream.
    """

    __slots__ = ("n", "adj", "degrees", "m")

    def __init__(self, n: int, adjacency: Sequence[int]):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(adjacency) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adjacency)}")
        adj = tuple(adjacency)
        for v, row in enumerate(adj):
            if row < 0 or row >> n:
                raise ValueError(f"adjacency row {v} mentions vertices outside 0..{n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(n):
            row = adj[v]
            while row:
                low = row & -row
                u = low.bit_length() - 1
                row ^= low
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self.degrees = tuple(row.bit_count() for row in adj)
        self.m = sum(self.degrees) // 2

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and (self.adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(VertexSet(self.n, self.adj[v])) if self.adj[v] else ()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def vertex_set(self) -> VertexSet:
        return VertexSet(self.n, (1 << self.n) - 1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeSummary:
    """Degree extremes of a graph; regular means min == max."""

    min_degree: int
    max_degree: int
    is_regular: bool
    degree_sequence: tuple[int, ...]


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered vertex pairs.

    Duplicate edges collapse silently; self-loops are rejected because
    they would corrupt every counting identity downstream.
    """
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def empty(n: int) -> Graph:
    return from_edge_list(n, [])


def complete(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def star(n: int) -> Graph:
    """Center 0 joined to leaves 1..n-1; the canonical non-regular fixture."""
    if n < 2:
        raise ValueError("a star needs at least 2 vertices")
    return from_edge_list(n, [(0, v) for v in range(1, n)])


def hypercube(d: int) -> Graph:
    """The d-dimensional hypercube: 2**d vertices, adjacent iff the labels
    differ in exactly one bit. d-regular with d * 2**(d-1) edges."""
    if not 1 <= d <= 26:
        raise ValueError("hypercube dimension must be in 1..26")
    n = 1 << d
    adj = [0] * n
    for v in range(n):
        for b in range(d):
            adj[v] |= 1 << (v ^ (1 << b))
    return Graph(n, adj)


def complement(graph: Graph) -> Graph:
    full = (1 << graph.n) - 1
    adj = [(full ^ graph.adj[v]) & ~(1 << v) for v in range(graph.n)]
    return Graph(graph.n, adj)


def is_connected(graph: Graph) -> bool:
    """Breadth-first reachability from vertex 0 over neighbor bitsets."""
    reached = 1
    frontier = 1
    while frontier:
        grown = 0
        bits = frontier
        while bits:
            low = bits & -bits
            grown |= graph.adj[low.bit_length() - 1]
            bits ^= low
        frontier = grown & ~reached
        reached |= frontier
    return reached == (1 << graph.n) - 1


def degree_summary(graph: Graph) -> DegreeSummary:
    lo = min(graph.degrees)
    hi = max(graph.degrees)
    return DegreeSummary(lo, hi, lo == hi, tuple(sorted(graph.degrees)))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Independent edges with probability p; deterministic for a fixed seed."""
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj)


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Random d-regular graph via the pairing model.

    Each vertex gets d stubs; a shuffled perfect matching of the stubs is
    kept only if it produces no loop or repeated edge, and the result is
    re-verified d-regular before return. Resampling stops after
    PAIRING_RESAMPLE_BUDGET failed attempts.
    """
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    if not 0 <= d < n:
        raise ValueError("degree must satisfy 0 <= d < n")
    if (n * d) % 2 != 0:
        raise ValueError(f"infeasible degree spec: n*d = {n * d} is odd")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(PAIRING_RESAMPLE_BUDGET):
        rng.shuffle(stubs)
        adj = [0] * n
        ok = True
        for k in range(0, len(stubs), 2):
            u, v = stubs[k], stubs[k + 1]
            if u == v or (adj[u] >> v) & 1:
                ok = False
                break
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if ok:
            graph = Graph(n, adj)
            if degree_summary(graph).is_regular and graph.degrees[0] == d:
                return graph
    raise RuntimeError(
        f"pairing model failed to produce a simple {d}-regular graph on {n} "
        f"vertices within {PAIRING_RESAMPLE_BUDGET} attempts"
    )


def from_spec(spec: str, seed: int = DEFAULT_SEED) -> Graph:
    """Build a graph from a "name:arg1:arg2" generator spec.

    Known names: complete:n, cycle:n, path:n, star:n, empty:n,
    hypercube:d, random:n:p, regular:n:d. The seed feeds the random
    generators and is ignored by the deterministic ones.
    """
    parts = spec.split(":")
    name, args = parts[0], parts[1:]

    def arg_int(idx: int) -> int:
        try:
            return int(args[idx])
        except (IndexError, ValueError):
            raise ValueError(f"bad generator argument in {spec!r}: expected integer at position {idx + 1}") from None

    def arg_float(idx: int) -> float:
        try:
            return float(args[idx])
        except (IndexError, ValueError):
            raise ValueError(f"bad generator argument in {spec!r}: expected number at position {idx + 1}") from None

    def want(count: int) -> None:
        if len(args) != count:
            raise ValueError(f"generator {name!r} takes {count} argument(s), got {len(args)} in {spec!r}")

    if name == "complete":
        want(1)
        return complete(arg_int(0))
    if name == "cycle":
        want(1)
        return cycle(arg_int(0))
    if name == "path":
        want(1)
        return path(arg_int(0))
    if name == "star":
        want(1)
        return star(arg_int(0))
    if name == "empty":
        want(1)
        return empty(arg_int(0))
    if name == "hypercube":
        want(1)
        return hypercube(arg_int(0))
    if name == "random":
        want(2)
        return random_graph(arg_int(0), arg_float(1), seed)
    if name == "regular":
        want(2)
        return random_regular(arg_int(0), arg_int(1), seed)
    raise ValueError(f"unknown generator {name!r} in {spec!r}")
