"""Immutable undirected simple graphs, edge-list I/O and domination checks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed edge lists or out-of-range vertex ids."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=True)
class Graph:
    """Undirected simple graph on dense ids ``0..n-1``.

    ``adjacency[v]`` is the ascending tuple of neighbours of ``v``. Instances
    are never mutated after construction, so one graph can back many solver
    runs at once.
    """

    n: int
    m: int
    adjacency: tuple[tuple[int, ...], ...]

    @cached_property
    def degree(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @cached_property
    def closed(self) -> tuple[tuple[int, ...], ...]:
        """Closed neighbourhoods N[v] = N(v) + v, as tuples."""
        return tuple((v,) + nbrs for v, nbrs in enumerate(self.adjacency))

    @cached_property
    def max_degree(self) -> int:
        return max(self.degree, default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edges(self) -> Iterable[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, dropping self-loops and merging parallel edges."""
    if n < 0:
        raise GraphFormatError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) has an id outside [0, {n})")
        if u == v:
            continue
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    m = sum(len(a) for a in adjacency) // 2
    return Graph(n=n, m=m, adjacency=adjacency)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", lineno) from None


def parse_edge_list(text: str, one_indexed: bool = False) -> Graph:
    """Parse a whitespace-separated edge list.

    Lines starting with ``#`` or ``%`` (and DIMACS ``c`` lines) are comments.
    A ``p <n> <m>`` header fixes the vertex count; DIMACS style
    ``p edge <n> <m>`` and ``e u v`` lines are accepted too. Without a header
    ``n`` is one more than the largest id seen.
    """
    shift = 1 if one_indexed else 0
    declared_n: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0][0] in "#%" or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            nums = [t for t in tokens[1:] if not t.isalpha()]
            if len(nums) != 2:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno)
            if declared_n is not None:
                raise GraphFormatError("duplicate header", lineno)
            declared_n = _parse_int(nums[0], lineno)
            if declared_n < 0:
                raise GraphFormatError("negative vertex count", lineno)
            continue
        if tokens[0] == "e":
            tokens = tokens[1:]
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 2 ids, got {len(tokens)} tokens", lineno)
        u = _parse_int(tokens[0], lineno) - shift
        v = _parse_int(tokens[1], lineno) - shift
        if u < 0 or v < 0:
            raise GraphFormatError(f"negative vertex id in {raw.strip()!r}", lineno)
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise GraphFormatError(
                f"vertex id in {raw.strip()!r} exceeds declared n={declared_n}", lineno
            )
        pairs.append((u, v))

    if declared_n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    else:
        n = declared_n
    return build_from_edges(n, pairs)


def read_edge_list(path, one_indexed: bool = False) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read(), one_indexed=one_indexed)


def format_edge_list(g: Graph) -> str:
    """Serialize with a ``p n m`` header, one ``u v`` edge per line (u < v)."""
    out = [f"p {g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def is_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    """True iff every vertex lies in ``d`` or has a neighbour in ``d``."""
    dominated = bytearray(g.n)
    closed = g.closed
    for v in set(d):
        for x in closed[v]:
            dominated[x] = 1
    return all(dominated)


# -- small named families, used by tests and scripts -------------------------

def cycle_graph(n: int) -> Graph:
    return build_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return build_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gnp_random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi G(n, p) drawn from a ``random.Random``-like ``rng``."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_from_edges(n, edges)


def gnm_random_graph(n: int, m: int, rng) -> Graph:
    """Uniform sparse random graph with about ``m`` distinct edges (O(m) expected)."""
    seen: set[tuple[int, int]] = set()
    limit = n * (n - 1) // 2
    m = min(m, limit)
    while len(seen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        seen.add((u, v) if u < v else (v, u))
    return build_from_edges(n, seen)
