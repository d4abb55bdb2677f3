"""Initial solution: pure greedy vs greedy-with-perturbation, keep the smaller.

Both constructions use lazily invalidated binary heaps. Entries go stale as
scores move; a popped entry is re-validated against the live score and
either accepted, re-pushed with its current value, or dropped. The state's
``gain_raised`` / ``loss_lowered`` logs cover the moves that would otherwise
hide a vertex behind an over-pessimistic entry.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass

from .graph import Graph
from .reductions import ReductionOutcome
from .state import SolverState, init_state


def remove_redundant(s: SolverState) -> int:
    """Drop non-locked members with zero loss in ascending id order.

    Removing a redundant vertex can only raise other losses, so one ascending
    sweep with a re-check per vertex leaves no redundant member behind.
    """
    removed = 0
    for v in sorted(s.removable):
        if s.loss[v] == 0:
            s.remove_vertex(v)
            removed += 1
    return removed


def _gain_heap(s: SolverState) -> list[tuple[int, int]]:
    heap = [
        (-s.gain[v], v)
        for v in range(s.graph.n)
        if not s.in_solution[v] and not s.is_barred[v] and s.gain[v] > 0
    ]
    heapq.heapify(heap)
    return heap


def _pop_max_gain(s: SolverState, heap: list[tuple[int, int]]) -> int:
    """Non-solution, non-barred vertex of max gain, smaller id on ties."""
    gain = s.gain
    inD = s.in_solution
    while True:
        neg, v = heapq.heappop(heap)
        if inD[v]:
            continue
        cur = gain[v]
        if cur == -neg:
            return v
        if cur < -neg and cur > 0:
            heapq.heappush(heap, (-cur, v))
        # cur > -neg: a fresher entry was pushed when the gain rose


def greed_construct(g: Graph, s: SolverState) -> SolverState:
    """Add max-gain vertices until feasible, then strip redundant ones."""
    heap = _gain_heap(s)
    while s.ud:
        s.add_vertex(_pop_max_gain(s, heap))
    remove_redundant(s)
    return s


def perturbation_construct(g: Graph, s: SolverState) -> SolverState:
    """Greedy additions, each followed by dropping the min-loss member when it
    covers strictly less than the addition just gained."""
    s.gain_raised = []
    s.loss_lowered = []
    gains = _gain_heap(s)
    losses: list[tuple[int, int]] = []
    loss = s.loss
    gain = s.gain
    inD = s.in_solution

    try:
        while s.ud:
            v = _pop_max_gain(s, gains)
            saved_gain = gain[v]
            s.add_vertex(v)
            heapq.heappush(losses, (loss[v], v))
            for d in s.loss_lowered:
                if inD[d] and not s.is_locked[d]:
                    heapq.heappush(losses, (loss[d], d))
            s.loss_lowered.clear()

            # min-loss member of D' minus the fixed set, smaller id on ties
            u = -1
            while losses:
                l, cand = losses[0]
                if not inD[cand]:
                    heapq.heappop(losses)
                    continue
                cur = loss[cand]
                if cur == l:
                    u = cand
                    break
                heapq.heappop(losses)
                if cur > l:
                    heapq.heappush(losses, (cur, cand))
            if u >= 0 and loss[u] < saved_gain:
                heapq.heappop(losses)
                s.remove_vertex(u)
                heapq.heappush(gains, (-gain[u], u))

            for y in s.gain_raised:
                if not inD[y] and not s.is_barred[y]:
                    heapq.heappush(gains, (-gain[y], y))
            s.gain_raised.clear()
    finally:
        s.gain_raised = None
        s.loss_lowered = None

    remove_redundant(s)
    return s


@dataclass
class Construction:
    """Both constructed states plus the chosen one (greedy unless strictly worse)."""

    greedy: SolverState
    perturbation: SolverState
    greedy_seconds: float = 0.0
    perturbation_seconds: float = 0.0

    @property
    def chosen(self) -> SolverState:
        if self.perturbation.size < self.greedy.size:
            return self.perturbation
        return self.greedy

    @property
    def chosen_name(self) -> str:
        return "perturbation" if self.chosen is self.perturbation else "greedy"


def construct_both(g: Graph, red: ReductionOutcome) -> Construction:
    t0 = time.perf_counter()
    greedy = greed_construct(g, init_state(g, red))
    t1 = time.perf_counter()
    pert = perturbation_construct(g, init_state(g, red))
    t2 = time.perf_counter()
    return Construction(greedy, pert, t1 - t0, t2 - t1)


def initialize(g: Graph, red: ReductionOutcome) -> SolverState:
    return construct_both(g, red).chosen
