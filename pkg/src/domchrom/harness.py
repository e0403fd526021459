"""Exhaustive verification of the six inequalities over graph corpora.

Every applicable (graph, operation instance) pair is checked with both
chi_dd values computed exactly; instances whose hypothesis fails (cut
vertex, bridge, order caps) become skip markers, and solver budget
exhaustion is recorded as an unknown, never as a pass.  Proof-witness
constructions are run alongside theorems 1-4 and 6 and their gap rates
are aggregated per proof case.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator, Union

from .graph import (
    Graph,
    bridges,
    cut_vertices,
    enumerate_connected_graphs,
    enumerate_cycles,
    parse_graph6,
    to_graph6,
)
from .ops import contract_edge, contract_vertices, cycle_extend, remove_edge, remove_vertex, subdivide
from .solver import (
    DEFAULT_BUDGET,
    ORACLE_MAX_ORDER,
    SolveResult,
    chi_dd_exact,
    chi_dd_oracle,
    path_chi_dd,
)
from .witnesses import extend_witness, reduce_witness

GAP_EXAMPLE_CAP = 20


@dataclass(frozen=True)
class HarnessConfig:
    theorems: tuple[int, ...] = (1, 2, 3, 4, 5, 6)
    k_values: tuple[int, ...] = (2, 3, 4)  # theorem 5 subdivision lengths
    cycle_cap: int = 6  # per-graph cap is min(n, cycle_cap)
    subdivided_cap: int = 24  # skip theorem 5 instances above this order
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    witnesses: bool = True


@dataclass(frozen=True)
class TheoremCheck:
    """One verified inequality instance; holds <=> lower <= chi_after <= upper."""

    theorem: int
    graph6: str
    instance: str
    chi_before: int
    chi_after: int
    lower: int
    upper: int
    holds: bool
    witness_extend: str | None = None
    witness_reduce: str | None = None
    reduce_case: str | None = None


@dataclass(frozen=True)
class SkippedCheck:
    theorem: int
    graph6: str
    instance: str
    reason: str


_UNKNOWN = "solver budget exhausted"

# chi_dd results keyed by graph6, shared across a run; insert-only with
# idempotent values, so concurrent readers are safe.
_CHI_CACHE: dict[str, SolveResult] = {}


def _solve_cached(g: Graph, budget: int, cache: dict[str, SolveResult]) -> SolveResult:
    key = to_graph6(g)
    hit = cache.get(key)
    if hit is not None:
        return hit
    result = chi_dd_exact(g, budget)
    if result.status == "exact":
        cache[key] = result
    return result


def check_theorem(
    theorem: int,
    g: Graph,
    instance,
    *,
    config: HarnessConfig | None = None,
    cache: dict[str, SolveResult] | None = None,
) -> Union[TheoremCheck, SkippedCheck]:
    """Verify one theorem instance; hypothesis violations come back as skips."""
    config = config or HarnessConfig()
    cache = _CHI_CACHE if cache is None else cache
    g6 = to_graph6(g)
    budget = config.budget

    if theorem == 1:
        v = instance
        label = f"v={v}"
        if g.n < 2:
            return SkippedCheck(1, g6, label, "order 1")
        if v in cut_vertices(g):
            return SkippedCheck(1, g6, label, "cut vertex")
        before = _solve_cached(g, budget, cache)
        if before.status != "exact":
            return SkippedCheck(1, g6, label, _UNKNOWN)
        target = remove_vertex(g, v)
        after = _solve_cached(target, budget, cache)
        if after.status != "exact":
            return SkippedCheck(1, g6, label, _UNKNOWN)
        lower = before.chi_dd - 1
        upper = before.chi_dd + g.degree(v) - 1
        ext = red = case = None
        if config.witnesses:
            ext_out = extend_witness("add_vertex", g, v, after.witness)
            red_out = reduce_witness("remove_vertex", g, v, before.witness)
            ext, red, case = ext_out.status, red_out.status, red_out.case
        return TheoremCheck(
            1, g6, label, before.chi_dd, after.chi_dd, lower, upper,
            lower <= after.chi_dd <= upper, ext, red, case,
        )

    if theorem == 2:
        u, v = sorted(instance)
        label = f"e={u}-{v}"
        if not g.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        if (u, v) in bridges(g):
            return SkippedCheck(2, g6, label, "bridge")
        before = _solve_cached(g, budget, cache)
        if before.status != "exact":
            return SkippedCheck(2, g6, label, _UNKNOWN)
        target = remove_edge(g, (u, v))
        after = _solve_cached(target, budget, cache)
        if after.status != "exact":
            return SkippedCheck(2, g6, label, _UNKNOWN)
        lower = before.chi_dd - 1
        upper = before.chi_dd + 2
        ext = red = case = None
        if config.witnesses:
            ext_out = extend_witness("add_edge", g, (u, v), after.witness)
            red_out = reduce_witness("remove_edge", g, (u, v), before.witness)
            ext, red, case = ext_out.status, red_out.status, red_out.case
        return TheoremCheck(
            2, g6, label, before.chi_dd, after.chi_dd, lower, upper,
            lower <= after.chi_dd <= upper, ext, red, case,
        )

    if theorem in (3, 4):
        u, v = sorted(instance)
        if theorem == 3:
            label = f"e={u}-{v}"
            if not g.has_edge(u, v):
                raise ValueError(f"({u},{v}) is not an edge")
            target = contract_edge(g, (u, v))
        else:
            label = f"uv={u}-{v}"
            if g.has_edge(u, v):
                return SkippedCheck(4, g6, label, "adjacent pair")
            target = contract_vertices(g, u, v)
        before = _solve_cached(g, budget, cache)
        if before.status != "exact":
            return SkippedCheck(theorem, g6, label, _UNKNOWN)
        after = _solve_cached(target, budget, cache)
        if after.status != "exact":
            return SkippedCheck(theorem, g6, label, _UNKNOWN)
        lower = before.chi_dd - 2
        upper = before.chi_dd + 1
        ext = red = case = None
        if config.witnesses:
            kind = "contract_edge" if theorem == 3 else "contract_vertices"
            ext_out = extend_witness(kind, g, (u, v), before.witness)
            red_out = reduce_witness("uncontract", g, (u, v), after.witness)
            ext, red, case = ext_out.status, red_out.status, red_out.case
        return TheoremCheck(
            theorem, g6, label, before.chi_dd, after.chi_dd, lower, upper,
            lower <= after.chi_dd <= upper, ext, red, case,
        )

    if theorem == 5:
        k = instance
        label = f"k={k}"
        if k < 2:
            return SkippedCheck(5, g6, label, "k < 2")
        if g.m == 0:
            return SkippedCheck(5, g6, label, "no edges")
        order = g.n + g.m * (k - 1)
        if order > config.subdivided_cap:
            return SkippedCheck(5, g6, label, f"subdivided order {order} above cap")
        before = _solve_cached(g, budget, cache)
        if before.status != "exact":
            return SkippedCheck(5, g6, label, _UNKNOWN)
        target, _ = subdivide(g, k)
        after = _solve_cached(target, budget, cache)
        if after.status != "exact":
            return SkippedCheck(5, g6, label, _UNKNOWN)
        if target.n <= ORACLE_MAX_ORDER:
            assert after.chi_dd == chi_dd_oracle(target), "solver disagrees with oracle"
        lower = path_chi_dd(k + 1)
        upper = (g.m - 1) * path_chi_dd(k) + path_chi_dd(k + 1)
        return TheoremCheck(
            5, g6, label, before.chi_dd, after.chi_dd, lower, upper,
            lower <= after.chi_dd <= upper,
        )

    if theorem == 6:
        cyc = instance
        cyc.validate(g)
        label = "C=" + "-".join(str(v) for v in cyc.vertices)
        before = _solve_cached(g, budget, cache)
        if before.status != "exact":
            return SkippedCheck(6, g6, label, _UNKNOWN)
        target = cycle_extend(g, cyc)
        after = _solve_cached(target, budget, cache)
        if after.status != "exact":
            return SkippedCheck(6, g6, label, _UNKNOWN)
        lower = before.chi_dd - cyc.length
        upper = before.chi_dd + 1
        ext = red = case = None
        if config.witnesses:
            ext_out = extend_witness("cycle_extend", g, cyc, before.witness)
            red_out = reduce_witness("remove_hub", g, cyc, after.witness)
            ext, red, case = ext_out.status, red_out.status, red_out.case
        return TheoremCheck(
            6, g6, label, before.chi_dd, after.chi_dd, lower, upper,
            lower <= after.chi_dd <= upper, ext, red, case,
        )

    raise ValueError(f"unknown theorem id {theorem}; expected 1..6")


def theorem_instances(theorem: int, g: Graph, config: HarnessConfig) -> Iterator:
    """The combinatorial instance domain a corpus run enumerates."""
    if theorem == 1:
        yield from range(g.n)
    elif theorem in (2, 3):
        yield from g.edges()
    elif theorem == 4:
        for v in range(g.n):
            for u in range(v):
                if not (g.adj[u] >> v) & 1:
                    yield (u, v)
    elif theorem == 5:
        yield from config.k_values
    elif theorem == 6:
        cap = min(g.n, config.cycle_cap)
        if cap >= 3:
            yield from enumerate_cycles(g, cap)
    else:
        raise ValueError(f"unknown theorem id {theorem}")


def _new_stats() -> dict:
    return {
        "instances": 0,
        "holds": 0,
        "violations": [],
        "skips": Counter(),
        "unknowns": 0,
        "tight_lower": 0,
        "tight_upper": 0,
        "extend_validated": 0,
        "extend_gaps": [],
        "reduce_cases": Counter(),
        "reduce_gaps": Counter(),
        "gap_examples": [],
    }


def _graph_summary(g: Graph, config: HarnessConfig) -> dict[int, dict]:
    summary = {t: _new_stats() for t in config.theorems}
    for theorem in config.theorems:
        stats = summary[theorem]
        for instance in theorem_instances(theorem, g, config):
            outcome = check_theorem(theorem, g, instance, config=config)
            if isinstance(outcome, SkippedCheck):
                stats["skips"][outcome.reason] += 1
                if outcome.reason == _UNKNOWN:
                    stats["unknowns"] += 1
                continue
            stats["instances"] += 1
            if outcome.holds:
                stats["holds"] += 1
            else:
                stats["violations"].append(outcome)
            if outcome.chi_after == outcome.lower:
                stats["tight_lower"] += 1
            if outcome.chi_after == outcome.upper:
                stats["tight_upper"] += 1
            if outcome.witness_extend is not None:
                if outcome.witness_extend == "validated":
                    stats["extend_validated"] += 1
                else:
                    stats["extend_gaps"].append((outcome.graph6, outcome.instance))
            if outcome.witness_reduce is not None:
                stats["reduce_cases"][outcome.reduce_case] += 1
                if outcome.witness_reduce == "gap":
                    stats["reduce_gaps"][outcome.reduce_case] += 1
                    stats["gap_examples"].append(
                        (outcome.reduce_case, outcome.graph6, outcome.instance)
                    )
    return summary


def _merge_stats(into: dict, part: dict) -> None:
    into["instances"] += part["instances"]
    into["holds"] += part["holds"]
    into["violations"].extend(part["violations"])
    into["skips"].update(part["skips"])
    into["unknowns"] += part["unknowns"]
    into["tight_lower"] += part["tight_lower"]
    into["tight_upper"] += part["tight_upper"]
    into["extend_validated"] += part["extend_validated"]
    into["extend_gaps"].extend(part["extend_gaps"])
    into["reduce_cases"].update(part["reduce_cases"])
    into["reduce_gaps"].update(part["reduce_gaps"])
    into["gap_examples"].extend(part["gap_examples"])


def _process_graph(task: tuple[str, HarnessConfig]) -> dict[int, dict]:
    g6, config = task
    return _graph_summary(parse_graph6(g6), config)


@dataclass
class CorpusReport:
    """Aggregated corpus run: per-theorem counts, violations, gap findings."""

    corpus: str
    config: HarnessConfig
    graphs: int
    per_theorem: dict[int, dict]
    elapsed: float = field(default=0.0)

    @property
    def violation_count(self) -> int:
        return sum(len(s["violations"]) for s in self.per_theorem.values())

    @property
    def unknown_count(self) -> int:
        return sum(s["unknowns"] for s in self.per_theorem.values())

    @property
    def ok(self) -> bool:
        return self.violation_count == 0 and self.unknown_count == 0

    def to_payload(self, include_timing: bool = False) -> dict:
        per_theorem = {}
        for t in sorted(self.per_theorem):
            s = self.per_theorem[t]
            reduce_stats = {
                case: {"count": s["reduce_cases"][case], "gaps": s["reduce_gaps"].get(case, 0)}
                for case in sorted(s["reduce_cases"])
            }
            per_theorem[str(t)] = {
                "instances": s["instances"],
                "holds": s["holds"],
                "violations": len(s["violations"]),
                "skips": dict(sorted(s["skips"].items())),
                "unknowns": s["unknowns"],
                "tight_lower": s["tight_lower"],
                "tight_upper": s["tight_upper"],
                "witness": {
                    "extend_validated": s["extend_validated"],
                    "extend_gaps": len(s["extend_gaps"]),
                    "reduce": reduce_stats,
                    "gap_examples": [
                        f"{case} {g6} {inst}" for case, g6, inst in s["gap_examples"]
                    ],
                },
            }
        payload = {
            "schema": 1,
            "corpus": self.corpus,
            "config": asdict(self.config),
            "graphs": self.graphs,
            "per_theorem": per_theorem,
            "violations": [asdict(v) for v in self.all_violations()],
            "summary": {
                "violations": self.violation_count,
                "unknowns": self.unknown_count,
                "ok": self.ok,
            },
        }
        if include_timing:
            payload["timing"] = {"elapsed_s": round(self.elapsed, 3)}
        return payload

    def all_violations(self) -> list[TheoremCheck]:
        out = []
        for t in sorted(self.per_theorem):
            out.extend(self.per_theorem[t]["violations"])
        return sorted(out, key=lambda c: (c.graph6, c.theorem, c.instance))

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_payload(include_timing), indent=2, sort_keys=True)

    def to_text(self, include_timing: bool = False) -> str:
        lines = [
            f"corpus: {self.corpus}   graphs: {self.graphs}",
            f"theorems: {','.join(str(t) for t in self.config.theorems)}"
            f"   k: {','.join(str(k) for k in self.config.k_values)}"
            f"   cycle cap: {self.config.cycle_cap}",
            "",
            f"{'thm':>3} {'instances':>9} {'holds':>9} {'viol':>5} {'skips':>6} "
            f"{'unk':>4} {'tight_lo':>8} {'tight_up':>8} {'ext_ok':>7} {'red_gaps':>8}",
        ]
        for t in sorted(self.per_theorem):
            s = self.per_theorem[t]
            lines.append(
                f"{t:>3} {s['instances']:>9} {s['holds']:>9} {len(s['violations']):>5} "
                f"{sum(s['skips'].values()):>6} {s['unknowns']:>4} "
                f"{s['tight_lower']:>8} {s['tight_upper']:>8} "
                f"{s['extend_validated']:>7} {sum(s['reduce_gaps'].values()):>8}"
            )
        for v in self.all_violations():
            lines.append(
                f"VIOLATION thm {v.theorem} {v.graph6} {v.instance}: "
                f"chi_after={v.chi_after} outside [{v.lower},{v.upper}]"
            )
        lines.append("")
        lines.append(
            f"verdict: {'ok' if self.ok else 'FAILED'} "
            f"({self.violation_count} violations, {self.unknown_count} unknowns)"
        )
        if include_timing:
            lines.append(f"elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines)


def _finalize(stats: dict[int, dict]) -> None:
    for s in stats.values():
        s["violations"] = sorted(
            s["violations"], key=lambda c: (c.graph6, c.theorem, c.instance)
        )
        s["extend_gaps"] = sorted(s["extend_gaps"])[:GAP_EXAMPLE_CAP]
        per_case: Counter = Counter()
        kept = []
        for item in sorted(s["gap_examples"]):
            if per_case[item[0]] < GAP_EXAMPLE_CAP:
                per_case[item[0]] += 1
                kept.append(item)
        s["gap_examples"] = kept


def run_corpus(
    graphs: Iterable[Graph],
    config: HarnessConfig | None = None,
    descriptor: str = "custom",
) -> CorpusReport:
    """Check every applicable (graph, theorem, instance) combination.

    The report is independent of worker scheduling: the accumulator only
    merges commutative counts, and all retained lists are sorted at the
    end by (graph6, theorem, instance).
    """
    config = config or HarnessConfig()
    start = time.perf_counter()
    stats = {t: _new_stats() for t in config.theorems}
    count = 0
    if config.workers > 1:
        tasks = [(to_graph6(g), config) for g in graphs]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for summary in pool.map(_process_graph, tasks, chunksize=32):
                count += 1
                for t in config.theorems:
                    _merge_stats(stats[t], summary[t])
    else:
        for g in graphs:
            count += 1
            summary = _graph_summary(g, config)
            for t in config.theorems:
                _merge_stats(stats[t], summary[t])
    _finalize(stats)
    return CorpusReport(
        corpus=descriptor,
        config=config,
        graphs=count,
        per_theorem=stats,
        elapsed=time.perf_counter() - start,
    )


def corpus_up_to(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    """All labeled connected graphs with n_min <= n <= n_max."""
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected_graphs(n)
