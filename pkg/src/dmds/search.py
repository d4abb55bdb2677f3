"""Dual-mode local search: (2,1)- and (3,2)-swaps with BMS and age/freq ties."""

from __future__ import annotations

import heapq
import random
import time
from dataclasses import dataclass

from .construct import initialize
from .graph import Graph, is_dominating_set
from .reductions import ReductionOutcome, apply_reductions
from .state import SolverState


@dataclass(frozen=True)
class SearchConfig:
    alpha: float = 0.5
    bms_t_min: int = 45
    bms_t_max: int = 55
    cutoff: float = 1000.0
    max_iters: int = 0
    seed: int = 1
    # draw the BMS sample size once per run instead of once per call
    bms_per_run: bool = False
    # stop as soon as a solution of this size is found (None: run to the budget)
    target_size: int | None = None

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")
        if not 1 <= self.bms_t_min <= self.bms_t_max:
            raise ValueError(
                f"need 1 <= bms_t_min <= bms_t_max, got {self.bms_t_min}, {self.bms_t_max}"
            )
        if self.max_iters < 0:
            raise ValueError("max_iters must be >= 0")
        if self.cutoff <= 0 and self.max_iters <= 0:
            raise ValueError("need a positive cutoff or a positive max_iters")


@dataclass
class RunReport:
    best_solution: frozenset[int]
    best_size: int
    time_to_best: float
    iterations: int
    seed: int
    feasible_verified: bool
    init_size: int = 0
    iter_to_best: int = 0
    elapsed: float = 0.0


def removal_key(s: SolverState, v: int) -> tuple[int, int, int, int]:
    """Smaller is better: low loss, then high age, high freq, low id."""
    return (s.loss[v], s.last_change[v], -s.freq[v], v)


def addition_key(s: SolverState, v: int) -> tuple[int, int, int, int]:
    """Smaller is better: high gain, then high age, low freq, low id."""
    return (-s.gain[v], s.last_change[v], s.freq[v], v)


def bms_select_removal(s: SolverState, rng: random.Random, t: int) -> int:
    """Best of ``t`` draws (with replacement) from the non-locked members of D."""
    pool = s.removable
    size = len(pool)
    loss = s.loss
    last = s.last_change
    freq = s.freq
    best = -1
    best_key = None
    for _ in range(t):
        v = pool.at(rng.randrange(size))
        key = (loss[v], last[v], -freq[v], v)
        if best_key is None or key < best_key:
            best, best_key = v, key
    return best


def candidate_pool_n_ud(s: SolverState) -> set[int]:
    """N[UD] minus D minus the barred vertices."""
    closed = s.graph.closed
    inD = s.in_solution
    barred = s.is_barred
    pool: set[int] = set()
    for x in s.ud:
        for y in closed[x]:
            if not inD[y] and not barred[y]:
                pool.add(y)
    return pool


def select_addition(s: SolverState) -> int:
    gain = s.gain
    last = s.last_change
    freq = s.freq
    return min(candidate_pool_n_ud(s), key=lambda v: (-gain[v], last[v], freq[v], v))


class DmdsSearch:
    """One search run over a state produced by reductions and construction.

    Non-locked members of D sit in a lazy min-heap keyed by
    ``(loss, last_change, -freq, id)``. Within one membership stint only
    ``loss`` moves; rises are repaired on pop, drops are pushed through the
    state's ``loss_lowered`` log. Members whose loss drops to zero are also
    collected for the redundancy sweep.
    """

    def __init__(self, state: SolverState, cfg: SearchConfig, rng: random.Random | None = None):
        self.state = state
        self.cfg = cfg
        self.rng = rng if rng is not None else random.Random(cfg.seed)
        self.run_t = self.rng.randint(cfg.bms_t_min, cfg.bms_t_max) if cfg.bms_per_run else 0
        state.loss_lowered = []
        self._heap: list[tuple[int, int, int, int]] = []
        self._zero: set[int] = set()
        self._rebuild_heap()
        self.best_solution = state.solution()
        self.best_size = state.size if state.feasible else state.graph.n + 1
        self.improved_at = 0
        self.last_removed: list[int] = []
        self.last_added: list[int] = []

    # -- heap upkeep -------------------------------------------------------

    def _rebuild_heap(self) -> None:
        s = self.state
        self._heap = [removal_key(s, v) for v in s.removable]
        heapq.heapify(self._heap)
        self._zero = {v for v in s.removable if s.loss[v] == 0}
        s.loss_lowered.clear()

    def _push(self, v: int) -> None:
        s = self.state
        heapq.heappush(self._heap, (s.loss[v], s.last_change[v], -s.freq[v], v))

    def _drain_log(self) -> None:
        s = self.state
        log = s.loss_lowered
        if len(self._heap) + len(log) > 4 * len(s.removable) + 64:
            self._rebuild_heap()
            return
        inD = s.in_solution
        locked = s.is_locked
        for d in log:
            if inD[d] and not locked[d]:
                self._push(d)
                if s.loss[d] == 0:
                    self._zero.add(d)
        log.clear()

    def _pop_min_loss(self) -> int:
        s = self.state
        heap = self._heap
        inD = s.in_solution
        loss = s.loss
        last = s.last_change
        freq = s.freq
        while heap:
            l, lc, nf, v = heap[0]
            if not inD[v] or lc != last[v] or nf != -freq[v]:
                heapq.heappop(heap)
                continue
            cur = loss[v]
            heapq.heappop(heap)
            if cur == l:
                return v
            if cur > l:
                heapq.heappush(heap, (cur, lc, nf, v))
        raise LookupError("no removable vertex")

    # -- mutations ---------------------------------------------------------

    def _remove(self, u: int) -> None:
        self.state.remove_vertex(u)
        self.last_removed.append(u)

    def _add(self, w: int) -> None:
        self.state.add_vertex(w)
        self._push(w)
        self.last_added.append(w)

    def strip_redundant(self) -> int:
        s = self.state
        removed = 0
        for v in sorted(self._zero):
            if s.in_solution[v] and not s.is_locked[v] and s.loss[v] == 0:
                self._remove(v)
                removed += 1
        self._zero.clear()
        return removed

    def _snapshot_if_better(self) -> bool:
        s = self.state
        if s.size < self.best_size:
            self.best_size = s.size
            self.best_solution = s.solution()
            self.improved_at = s.iter
            return True
        return False

    def step(self) -> bool:
        """One pass of the main loop. Returns True if the best solution improved."""
        s = self.state
        cfg = self.cfg
        rng = self.rng
        self.last_removed = []
        self.last_added = []
        improved = False
        self._drain_log()

        if s.feasible:
            self.strip_redundant()
            improved = self._snapshot_if_better()
            if s.removable:
                self._remove(self._pop_min_loss())

        rm_num = 1
        if s.removable:
            self._remove(s.removable.choice(rng))
            rm_num = 2
        if rng.random() < cfg.alpha and s.removable:
            t = self.run_t or rng.randint(cfg.bms_t_min, cfg.bms_t_max)
            self._remove(bms_select_removal(s, rng, t))
            rm_num = 3

        if s.ud:
            self._add(select_addition(s))
        if s.ud and rm_num == 3:
            self._add(select_addition(s))

        s.iter += 1
        return improved

    def stuck(self) -> bool:
        """Feasible with nothing left to remove: D is exactly the locked set."""
        s = self.state
        return s.feasible and not s.removable

    def finish(self) -> None:
        """Account for a feasible state reached by the last pass."""
        s = self.state
        self._drain_log()
        if s.feasible:
            self.strip_redundant()
            self._snapshot_if_better()
        s.loss_lowered = None


def solve(g: Graph, cfg: SearchConfig, red: ReductionOutcome | None = None) -> RunReport:
    """Reductions, construction, then search until the cutoff or iteration cap."""
    start = time.perf_counter()
    red = red if red is not None else apply_reductions(g)
    state = initialize(g, red)
    init_size = state.size
    search = DmdsSearch(state, cfg)
    time_to_best = time.perf_counter() - start
    target = cfg.target_size
    deadline = start + cfg.cutoff if cfg.cutoff > 0 else float("inf")

    while True:
        if target is not None and search.best_size <= target:
            break
        if cfg.max_iters and state.iter >= cfg.max_iters:
            break
        if search.stuck():
            break
        now = time.perf_counter()
        if now >= deadline:
            break
        if search.step():
            time_to_best = now - start
    before = search.best_size
    search.finish()
    end = time.perf_counter()
    if search.best_size < before:
        time_to_best = end - start

    best = search.best_solution
    feasible = (
        is_dominating_set(g, best)
        and red.fixed <= best
        and not (best & red.excluded)
    )
    return RunReport(
        best_solution=best,
        best_size=len(best),
        time_to_best=time_to_best,
        iterations=state.iter,
        seed=cfg.seed,
        feasible_verified=feasible,
        init_size=init_size,
        iter_to_best=search.improved_at,
        elapsed=end - start,
    )
