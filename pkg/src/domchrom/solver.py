"""Exact domination-chromatic-number search plus a brute-force oracle.

The searcher backtracks over vertices in descending-degree order,
assigning each to an existing class or opening a new one.  Three facts
drive the pruning:

* a class with members S can only be dominated by ``intersect N[u] over
  u in S``, which shrinks as S grows; empty means dead branch;
* a vertex v dominates a final class i iff v lies in that intersection,
  so any vertex outside the union of current dominator sets can only be
  rescued by a class that has not been opened yet;
* every class fits inside some closed neighborhood, so at most
  ``max_degree + 1`` vertices can be rescued per unopened class.

The oracle ignores all of that and scans every set partition.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

from .coloring import Coloring, is_domination_coloring
from .graph import Graph, is_connected, make_named

DEFAULT_BUDGET = 10_000_000
ORACLE_MAX_ORDER = 8  # Bell(8) = 4140 partitions

# When set, every incremental dominator update is re-derived from scratch
# and compared; slow, only for the pruning-soundness test.
VERIFY_PRUNING = False


class BudgetExceeded(Exception):
    """Search ran out of nodes before the question was decided."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve; ``status`` is ``exact`` or ``unknown``.

    For ``unknown`` results ``chi_dd``/``witness`` are None and
    ``lower``/``upper`` carry the best proven bounds.
    """

    chi_dd: int | None
    witness: Coloring | None
    status: str
    lower: int
    upper: int
    nodes: int
    elapsed: float


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValueError("solver requires a connected graph")


def _greedy_clique(g: Graph) -> int:
    clique = 0
    size = 0
    for v in sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v)):
        if clique & ~g.adj[v]:
            continue
        clique |= 1 << v
        size += 1
    return size


def _lower_bound(g: Graph) -> int:
    # Every class sits inside a dominator's closed neighborhood, hence the
    # ball term; the clique term covers properness.  Correctness never
    # depends on either, they only skip hopeless k values.
    ball = -(-g.n // (g.max_degree + 1))
    return max(1, _greedy_clique(g), ball)


def _search(g: Graph, k: int, budget: int) -> tuple[tuple[int, ...] | None, int]:
    """Find an assignment with exactly k classes, or prove none exists.

    Returns (assignment or None, nodes used).  Raises BudgetExceeded.
    Deterministic: fixed vertex order, classes tried in index order, a new
    class only as the last resort (class j opens only after 0..j-1).
    """
    n = g.n
    adj = g.adj
    closed = g.closed
    full = (1 << n) - 1
    ball = g.max_degree + 1
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    # remaining_mask[idx] = bitset of vertices not yet reached at depth idx
    remaining_mask = [0] * (n + 1)
    for idx in range(n - 1, -1, -1):
        remaining_mask[idx] = remaining_mask[idx + 1] | (1 << order[idx])

    members = [0] * k
    doms = [0] * k
    allowed = [0] * k
    assignment = [0] * n
    nodes = 0

    def rec(idx: int, opened: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(nodes)

        union_d = 0
        for i in range(opened):
            union_d |= doms[i]
        uncov = full & ~union_d
        if opened == k:
            if uncov:
                return False
            unassigned = remaining_mask[idx]
            if unassigned:
                fit = 0
                for i in range(k):
                    fit |= allowed[i]
                if unassigned & ~fit:
                    return False
        elif uncov.bit_count() > (k - opened) * ball:
            return False

        if idx == n:
            return opened == k

        u = order[idx]
        cu = closed[u]
        au = adj[u]
        ubit = 1 << u
        rem = n - idx - 1

        if opened + rem >= k:
            for i in range(opened):
                if not (allowed[i] >> u) & 1:
                    continue
                nd = doms[i] & cu
                if not nd:
                    continue
                if VERIFY_PRUNING:
                    check = full
                    probe = members[i] | ubit
                    while probe:
                        low = probe & -probe
                        check &= closed[low.bit_length() - 1]
                        probe ^= low
                    assert nd == check, "incremental dominator set diverged"
                old_d = doms[i]
                old_a = allowed[i]
                members[i] |= ubit
                doms[i] = nd
                allowed[i] = old_a & ~au
                assignment[u] = i
                if rec(idx + 1, opened):
                    return True
                members[i] ^= ubit
                doms[i] = old_d
                allowed[i] = old_a

        if opened < k and opened + 1 + rem >= k:
            members[opened] = ubit
            doms[opened] = cu
            allowed[opened] = full & ~au
            assignment[u] = opened
            if rec(idx + 1, opened + 1):
                return True
            members[opened] = 0
            doms[opened] = 0
            allowed[opened] = 0

        return False

    found = rec(0, 0)
    return (tuple(assignment) if found else None, nodes)


def find_domination_coloring(
    g: Graph, k: int, budget: int = DEFAULT_BUDGET
) -> Coloring | None:
    """A domination coloring of g with exactly k nonempty classes, or None.

    Raises BudgetExceeded when the budget runs out, which is a distinct
    "unknown" outcome, never to be read as "none exists".
    """
    _require_connected(g)
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= {g.n}, got {k}")
    assignment, _ = _search(g, k, budget)
    if assignment is None:
        return None
    witness = Coloring(assignment)
    ok, diag = is_domination_coloring(g, witness)
    assert ok, f"searcher returned an invalid coloring: {diag}"
    assert witness.class_count == k
    return witness


def chi_dd_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Smallest class count over all domination colorings, with a witness."""
    _require_connected(g)
    start = time.perf_counter()
    total = 0
    k = _lower_bound(g)
    while k <= g.n:
        try:
            assignment, used = _search(g, k, budget - total)
        except BudgetExceeded as exc:
            return SolveResult(
                chi_dd=None,
                witness=None,
                status="unknown",
                lower=k,
                upper=g.n,
                nodes=total + exc.nodes,
                elapsed=time.perf_counter() - start,
            )
        total += used
        if assignment is not None:
            witness = Coloring(assignment)
            ok, diag = is_domination_coloring(g, witness)
            assert ok, f"searcher returned an invalid coloring: {diag}"
            return SolveResult(
                chi_dd=k,
                witness=witness,
                status="exact",
                lower=k,
                upper=k,
                nodes=total,
                elapsed=time.perf_counter() - start,
            )
        k += 1
    raise AssertionError(
        "unreachable: all-singletons is a domination coloring of any connected graph"
    )


@lru_cache(maxsize=None)
def _partition_colorings(n: int) -> tuple[tuple[Coloring, ...], ...]:
    """Every set partition of 0..n-1 as a Coloring, grouped by class count.

    Entry k-1 holds the partitions into exactly k blocks, encoded as
    restricted growth strings, so they are already in dense normal form.
    """
    if n == 1:
        return ((Coloring((0,)),),)
    by_k: list[list[Coloring]] = [[] for _ in range(n)]
    rgs = [0] * n

    def rec(i: int, mx: int) -> None:
        if i == n:
            by_k[mx].append(Coloring(tuple(rgs)))
            return
        for c in range(mx + 2):
            rgs[i] = c
            rec(i + 1, mx if c <= mx else c)

    rec(1, 0)
    return tuple(tuple(group) for group in by_k)


def chi_dd_oracle(g: Graph) -> int:
    """Minimum class count by scanning all set partitions of the vertex set.

    Shares nothing with the backtracking search beyond the definitional
    checker, which is what makes it a usable correctness oracle.
    """
    _require_connected(g)
    if g.n > ORACLE_MAX_ORDER:
        raise ValueError(f"oracle guard: supports n <= {ORACLE_MAX_ORDER}, got {g.n}")
    for group in _partition_colorings(g.n):
        for c in group:
            if is_domination_coloring(g, c)[0]:
                return c.class_count
    raise AssertionError("unreachable: all-singletons always qualifies")


_PATH_CHI: dict[int, int] = {}


def path_chi_dd(k: int, cache: dict[int, int] | None = None) -> int:
    """Memoized chi_dd of the path on k vertices; P_1 -> 1.

    The memo is insert-only and idempotent, so sharing it across
    concurrent solves is safe.
    """
    if k < 1:
        raise ValueError("path order must be at least 1")
    memo = _PATH_CHI if cache is None else cache
    value = memo.get(k)
    if value is None:
        result = chi_dd_exact(make_named("path", k))
        assert result.chi_dd is not None
        value = memo[k] = result.chi_dd
    return value
