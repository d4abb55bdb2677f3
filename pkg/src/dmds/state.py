"""Mutable local-search state with incrementally maintained loss/gain scores."""

from __future__ import annotations

import copy
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph
from .reductions import ReductionOutcome


class IndexedSet:
    """Integer set over ``0..n-1`` with O(1) add/discard/contains and random pick.

    Members live in a dense list; ``_pos`` maps a member to its slot so that
    removal can swap the last element into the hole.
    """

    __slots__ = ("_items", "_pos")

    def __init__(self, n: int, members=()):
        self._items: list[int] = []
        self._pos = [-1] * n
        for v in members:
            self.add(v)

    def add(self, v: int) -> None:
        if self._pos[v] < 0:
            self._pos[v] = len(self._items)
            self._items.append(v)

    def discard(self, v: int) -> None:
        i = self._pos[v]
        if i < 0:
            return
        last = self._items.pop()
        if last != v:
            self._items[i] = last
            self._pos[last] = i
        self._pos[v] = -1

    def __contains__(self, v: int) -> bool:
        return self._pos[v] >= 0

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator[int]:
        return iter(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def at(self, i: int) -> int:
        return self._items[i]

    def choice(self, rng) -> int:
        return self._items[rng.randrange(len(self._items))]

    def to_set(self) -> set[int]:
        return set(self._items)


@dataclass(frozen=True)
class Scores:
    """Normalized score view: loss is 0 off the solution, gain is 0 on it."""

    cover_count: tuple[int, ...]
    loss: tuple[int, ...]
    gain: tuple[int, ...]
    ud: frozenset[int]


class SolverState:
    """Current solution D with cover counts, loss, gain, age and freq.

    ``loss[v]`` is meaningful only for ``v`` in D and ``gain[v]`` only for
    ``v`` outside D; the inactive entry holds stale data and must not be read.
    ``removable`` holds the non-locked members of D.

    Setting ``gain_raised`` / ``loss_lowered`` to a list makes the mutators log
    vertices whose gain rose or whose loss fell, so lazy priority queues built
    on top only need to be told about moves in the "wrong" direction.
    """

    def __init__(self, g: Graph, red: ReductionOutcome | None = None):
        red = red if red is not None else ReductionOutcome.empty()
        n = g.n
        self.graph = g
        self.locked = red.fixed
        self.barred = red.excluded
        self.is_locked = bytearray(n)
        self.is_barred = bytearray(n)
        for v in red.fixed:
            self.is_locked[v] = 1
        for v in red.excluded:
            self.is_barred[v] = 1
        self.in_solution = bytearray(n)
        self.last_change = [0] * n
        self.freq = [0] * n
        self.iter = 0
        self.ud = IndexedSet(n)
        self.removable = IndexedSet(n)
        self.gain_raised: list[int] | None = None
        self.loss_lowered: list[int] | None = None

        for v in red.fixed:
            self.in_solution[v] = 1
            self.freq[v] = 1
        self.size = len(red.fixed)
        cover, loss, gain, ud = _scores_from_scratch(g, self.in_solution)
        self.cover_count = cover
        self.loss = loss
        self.gain = gain
        for v in ud:
            self.ud.add(v)

    # -- queries -----------------------------------------------------------

    @property
    def feasible(self) -> bool:
        return not self.ud

    def solution(self) -> frozenset[int]:
        return frozenset(v for v in range(self.graph.n) if self.in_solution[v])

    def age_of(self, v: int) -> int:
        return self.iter - self.last_change[v]

    def scores(self) -> Scores:
        inD = self.in_solution
        return Scores(
            cover_count=tuple(self.cover_count),
            loss=tuple(l if inD[v] else 0 for v, l in enumerate(self.loss)),
            gain=tuple(0 if inD[v] else g for v, g in enumerate(self.gain)),
            ud=frozenset(self.ud),
        )

    def copy(self) -> "SolverState":
        """Independent copy sharing only the immutable graph and reduction sets."""
        memo = {id(self.graph): self.graph, id(self.locked): self.locked, id(self.barred): self.barred}
        return copy.deepcopy(self, memo)

    # -- mutations ---------------------------------------------------------

    def add_vertex(self, w: int) -> None:
        assert not self.in_solution[w], f"vertex {w} already in solution"
        assert not self.is_barred[w], f"vertex {w} is barred"
        closed = self.graph.closed
        inD = self.in_solution
        cover = self.cover_count
        loss = self.loss
        gain = self.gain
        ud = self.ud
        lowered = self.loss_lowered

        inD[w] = 1
        private = 0
        for x in closed[w]:
            c = cover[x]
            cover[x] = c + 1
            if c == 0:
                ud.discard(x)
                private += 1
                for y in closed[x]:
                    if not inD[y]:
                        gain[y] -= 1
            elif c == 1:
                for d in closed[x]:
                    if inD[d] and d != w:
                        break
                loss[d] -= 1
                if lowered is not None:
                    lowered.append(d)
        loss[w] = private
        self.freq[w] += 1
        self.last_change[w] = self.iter
        self.size += 1
        if not self.is_locked[w]:
            self.removable.add(w)

    def remove_vertex(self, u: int) -> None:
        assert self.in_solution[u], f"vertex {u} not in solution"
        assert not self.is_locked[u], f"vertex {u} is locked"
        closed = self.graph.closed
        inD = self.in_solution
        cover = self.cover_count
        loss = self.loss
        gain = self.gain
        ud = self.ud
        raised = self.gain_raised

        inD[u] = 0
        # u is outside D now, so the loop below counts its own gain
        gain[u] = 0
        for x in closed[u]:
            c = cover[x] - 1
            cover[x] = c
            if c == 0:
                ud.add(x)
                for y in closed[x]:
                    if not inD[y]:
                        gain[y] += 1
                        if raised is not None:
                            raised.append(y)
            elif c == 1:
                for d in closed[x]:
                    if inD[d]:
                        break
                loss[d] += 1
        self.last_change[u] = self.iter
        self.size -= 1
        self.removable.discard(u)


def _scores_from_scratch(g: Graph, in_solution) -> tuple[list[int], list[int], list[int], list[int]]:
    closed = g.closed
    n = g.n
    cover = [0] * n
    for v in range(n):
        if in_solution[v]:
            for x in closed[v]:
                cover[x] += 1
    loss = [0] * n
    gain = [0] * n
    for v in range(n):
        if in_solution[v]:
            loss[v] = sum(1 for x in closed[v] if cover[x] == 1)
        else:
            gain[v] = sum(1 for x in closed[v] if cover[x] == 0)
    ud = [v for v in range(n) if cover[v] == 0]
    return cover, loss, gain, ud


def init_state(g: Graph, red: ReductionOutcome | None = None) -> SolverState:
    return SolverState(g, red)


def recompute_scores(s: SolverState) -> Scores:
    """From-scratch scores for the current D, independent of the live arrays."""
    cover, loss, gain, ud = _scores_from_scratch(s.graph, s.in_solution)
    return Scores(tuple(cover), tuple(loss), tuple(gain), frozenset(ud))
