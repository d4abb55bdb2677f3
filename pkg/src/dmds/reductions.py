"""Degree-0, degree-1 and triangle reduction rules, applied in one scan."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class ReductionOutcome:
    """Vertices forced into the solution (``fixed``) and barred from it (``excluded``)."""

    fixed: frozenset[int]
    excluded: frozenset[int]

    def residual_size(self, n: int) -> int:
        return n - len(self.fixed) - len(self.excluded)

    @classmethod
    def empty(cls) -> "ReductionOutcome":
        return cls(frozenset(), frozenset())


def apply_reductions(g: Graph) -> ReductionOutcome:
    """Single ascending pass over the vertices.

    The scanned vertex is always the low-degree vertex of a rule pattern and
    degrees are read from the original graph. "Dominated" means dominated by
    the fixed set accumulated so far in the pass.
    """
    adj = g.adjacency
    deg = g.degree
    closed = g.closed
    dominated = bytearray(g.n)
    fixed: list[int] = []
    excluded: list[int] = []

    def fix(w: int) -> None:
        fixed.append(w)
        for x in closed[w]:
            dominated[x] = 1

    for v in range(g.n):
        d = deg[v]
        if d == 0:
            if not dominated[v]:
                fix(v)
        elif d == 1:
            u = adj[v][0]
            if not dominated[u]:
                fix(u)
                excluded.append(v)
        elif d == 2:
            b, c = adj[v]
            # b and c must be adjacent; checking through a degree-2 corner is O(1)
            if deg[b] == 2 and deg[c] == 2:
                if adj[b] != tuple(sorted((v, c))):
                    continue
                # isolated triangle: any corner works, take the smaller id
                w, other = (b, c) if b < c else (c, b)
            elif deg[b] == 2:
                if c not in adj[b]:
                    continue
                w, other = c, b
            elif deg[c] == 2:
                if b not in adj[c]:
                    continue
                w, other = b, c
            else:
                continue
            if not dominated[w]:
                fix(w)
                excluded.append(v)
                excluded.append(other)

    return ReductionOutcome(frozenset(fixed), frozenset(excluded))
