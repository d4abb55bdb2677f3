"""Exact minimum dominating sets for small graphs, and solution verification."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .graph import Graph, is_dominating_set
from .reductions import ReductionOutcome

MAX_ORACLE_N = 26
MAX_BRUTE_N = 12


class OracleError(RuntimeError):
    pass


class OracleTooLarge(OracleError):
    pass


class OracleAborted(OracleError):
    pass


class OracleInfeasible(OracleError):
    pass


def _masks(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        mask = 0
        for x in g.closed[v]:
            mask |= 1 << x
        out.append(mask)
    return out


def exact_min_dominating_set(
    g: Graph,
    fixed: Iterable[int] = (),
    barred: Iterable[int] = (),
    node_limit: int = 10_000_000,
) -> frozenset[int]:
    """Minimum dominating set containing ``fixed`` and avoiding ``barred``.

    Branch and bound on bitmasks: pick the undominated vertex with the fewest
    admissible dominators and try each of them in turn, barring the ones
    already tried in later siblings.
    """
    n = g.n
    if n > MAX_ORACLE_N:
        raise OracleTooLarge(f"oracle limited to n <= {MAX_ORACLE_N}, got n={n}")
    fixed = frozenset(fixed)
    barred = frozenset(barred)
    if fixed & barred:
        raise ValueError("fixed and barred overlap")

    closed = _masks(g)
    full = (1 << n) - 1
    allowed0 = full
    for v in barred:
        allowed0 &= ~(1 << v)
    # dominators[v]: vertices whose closed neighbourhood contains v (= N[v])
    dominators = closed

    start_dom = 0
    start_set = 0
    for v in fixed:
        start_dom |= closed[v]
        start_set |= 1 << v
    for v in range(n):
        if not (start_dom >> v) & 1 and not dominators[v] & allowed0:
            raise OracleInfeasible(f"vertex {v} cannot be dominated")

    best_set = start_set | (allowed0 & ~start_set)  # everything admissible
    # a feasible fallback exists because every vertex has an admissible dominator
    best_size = bin(best_set).count("1")
    nodes = 0

    def search(dom: int, chosen: int, size: int, allowed: int) -> None:
        nonlocal best_set, best_size, nodes
        nodes += 1
        if nodes > node_limit:
            raise OracleAborted(f"node limit {node_limit} exceeded")
        undominated = full & ~dom
        if not undominated:
            if size < best_size:
                best_size = size
                best_set = chosen
            return
        if size + 1 >= best_size:
            return
        # lower bound: remaining vertices / best single-vertex coverage
        remaining = bin(undominated).count("1")
        best_cover = 0
        pick = -1
        pick_count = n + 1
        u = undominated
        while u:
            low = u & -u
            v = low.bit_length() - 1
            u ^= low
            cands = dominators[v] & allowed
            cnt = bin(cands).count("1")
            if cnt == 0:
                return
            if cnt < pick_count:
                pick, pick_count = v, cnt
        a = allowed
        while a:
            low = a & -a
            c = low.bit_length() - 1
            a ^= low
            cov = bin(closed[c] & undominated).count("1")
            if cov > best_cover:
                best_cover = cov
        if size + -(-remaining // best_cover) >= best_size:
            return

        cands = dominators[pick] & allowed
        order = []
        while cands:
            low = cands & -cands
            c = low.bit_length() - 1
            cands ^= low
            order.append((-bin(closed[c] & undominated).count("1"), c))
        order.sort()
        for _, c in order:
            search(dom | closed[c], chosen | (1 << c), size + 1, allowed)
            allowed &= ~(1 << c)

    search(start_dom, start_set, bin(start_set).count("1"), allowed0 & ~start_set)
    return frozenset(v for v in range(n) if (best_set >> v) & 1)


def brute_force_min_dominating_set(
    g: Graph, fixed: Iterable[int] = (), barred: Iterable[int] = ()
) -> frozenset[int]:
    """Plain subset enumeration by increasing size; a cross-check for tiny graphs."""
    n = g.n
    if n > MAX_BRUTE_N:
        raise OracleTooLarge(f"brute force limited to n <= {MAX_BRUTE_N}, got n={n}")
    fixed = frozenset(fixed)
    barred = frozenset(barred)
    free = [v for v in range(n) if v not in fixed and v not in barred]
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            d = fixed.union(extra)
            if is_dominating_set(g, d):
                return frozenset(d)
    raise OracleInfeasible("no admissible dominating set")


def verify_solution(g: Graph, d: Iterable[int], red: ReductionOutcome | None = None) -> bool:
    d = frozenset(d)
    if any(not 0 <= v < g.n for v in d):
        return False
    if not is_dominating_set(g, d):
        return False
    if red is not None:
        return red.fixed <= d and not (d & red.excluded)
    return True
