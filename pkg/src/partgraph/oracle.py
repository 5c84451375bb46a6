"""Exhaustive cross-checking of every closed form against brute force.

Each verifier sweeps all partitions of a weight and recomputes an invariant
along two or three independent routes: move enumeration, adjacency testing
in the constructed graph, clique search, and the closed formulas.  A failure
entry records the partition and both values, enough to replay the case with
one CLI call.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .graphs import (
    CliqueClassificationError,
    build_partition_graph,
    classify_clique,
    cliques_through,
    line_graph,
    verify_line_graph_theorem,
)
from .local_model import (
    LocalType,
    admissibility_graph,
    degree_formula,
    local_clique_number,
    local_dimension,
    local_type,
)
from .partitions import Partition, enumerate_partitions
from .transfers import TransferMove, are_adjacent, neighbors


@dataclass
class CheckResult:
    """Outcome of one verifier: how many partitions it saw and what failed."""

    name: str
    examined: int
    failures: list[dict] = field(default_factory=list)
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"name": self.name, "examined": self.examined, "failures": self.failures}


@dataclass
class VerificationReport:
    n_range: tuple[int, int]
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json(self) -> dict:
        """Report as one JSON object; identical runs differ only in timings_ms."""
        return {
            "n_range": list(self.n_range),
            "checks": [check.to_json() for check in self.checks],
            "timings_ms": {check.name: round(check.ms, 3) for check in self.checks},
            "pass": self.passed,
        }


def _failure(check: str, n: int, p: Partition, detail: str) -> dict:
    return {"check": check, "n": n, "partition": str(p), "detail": detail}


def verify_degrees(n: int, with_graph: bool = True) -> CheckResult:
    """Three-way degree check over all partitions of n.

    Compares the brute-force neighbor count, the closed formula, and, unless
    with_graph is false, the vertex degree in the fully built transfer graph.
    """
    start = time.perf_counter()
    failures: list[dict] = []
    vertices = enumerate_partitions(n)
    graph = build_partition_graph(n) if with_graph else None
    for idx, p in enumerate(vertices):
        values = {
            "neighbor_count": len(neighbors(p)),
            "formula": degree_formula(local_type(p)),
        }
        if graph is not None:
            values["graph_degree"] = graph.degree(idx)
        if len(set(values.values())) != 1:
            failures.append(_failure("degrees", n, p, f"degree mismatch: {values}"))
    ms = (time.perf_counter() - start) * 1000
    return CheckResult("degrees", len(vertices), failures, ms)


def verify_neighborhoods(n: int) -> CheckResult:
    """Pairwise neighborhood-adjacency check over all partitions of n."""
    start = time.perf_counter()
    failures: list[dict] = []
    vertices = enumerate_partitions(n)
    for p in vertices:
        result = verify_line_graph_theorem(n, p)
        for v in result.violations:
            failures.append(_failure(
                "neighborhoods", n, p,
                f"pair {v.first}/{v.second}: adjacent_in_graph={v.adjacent_in_graph}, "
                f"share_corner={v.share_corner}",
            ))
    ms = (time.perf_counter() - start) * 1000
    return CheckResult("neighborhoods", len(vertices), failures, ms)


def verify_cliques(n: int) -> CheckResult:
    """Clique check over all partitions of n.

    Every maximal clique found by search must classify by a shared corner,
    and one plus the largest clique size must match the closed-form clique
    number, with the dimension one below that.
    """
    start = time.perf_counter()
    failures: list[dict] = []
    vertices = enumerate_partitions(n)
    for p in vertices:
        cliques = cliques_through(n, p)
        for clique in cliques:
            try:
                classify_clique(clique)
            except CliqueClassificationError as exc:
                failures.append(_failure(
                    "cliques", n, p,
                    f"unclassifiable clique {[str(m) for m in clique]}: {exc}",
                ))
        searched = 1 + max((len(clique) for clique in cliques), default=0)
        T = local_type(p)
        formula = local_clique_number(T)
        if searched != formula:
            failures.append(_failure(
                "cliques", n, p,
                f"clique number mismatch: search={searched}, formula={formula}",
            ))
        if local_dimension(T) != formula - 1:
            failures.append(_failure(
                "cliques", n, p,
                f"dimension mismatch: {local_dimension(T)} vs clique number {formula}",
            ))
    ms = (time.perf_counter() - start) * 1000
    return CheckResult("cliques", len(vertices), failures, ms)


def _local_signature(n: int, p: Partition) -> dict:
    # Everything below is recomputed from the concrete partition: moves via
    # the admissibility test, adjacency via conjugates of actual neighbors,
    # clique number via search.  Nothing reads the type-level closed forms.
    nbrs = neighbors(p)
    moves = tuple(sorted(nbrs))
    adjacency = tuple(
        (a, b) for a, b in combinations(moves, 2) if are_adjacent(nbrs[a], nbrs[b])
    )
    omega = 1 + max((len(clique) for clique in cliques_through(n, p)), default=0)
    return {
        "moves": moves,
        "adjacency": adjacency,
        "degree": len(moves),
        "clique_number": omega,
        "dimension": omega - 1,
    }


def _type_prediction(T: LocalType) -> dict:
    B = admissibility_graph(T)
    L = line_graph(B)
    return {
        "moves": tuple(TransferMove(i, j) for i, j in B.sorted_edges()),
        "adjacency": tuple(sorted((L.labels[a], L.labels[b]) for a, b in L.edges)),
        "degree": degree_formula(T),
        "clique_number": local_clique_number(T),
        "dimension": local_dimension(T),
    }


def verify_type_determinacy(n_max: int) -> CheckResult:
    """Partitions of equal local type must expose identical local data.

    Sweeps every partition of every weight up to n_max.  The first partition
    of each type is checked against what the type alone predicts; every later
    one against the first, across different weights.
    """
    start = time.perf_counter()
    failures: list[dict] = []
    first_seen: dict[LocalType, tuple[int, Partition, dict]] = {}
    examined = 0
    for n in range(1, n_max + 1):
        for p in enumerate_partitions(n):
            examined += 1
            signature = _local_signature(n, p)
            T = local_type(p)
            if T not in first_seen:
                predicted = _type_prediction(T)
                for key in signature:
                    if signature[key] != predicted[key]:
                        failures.append(_failure(
                            "type_determinacy", n, p,
                            f"{key} disagrees with the type model: "
                            f"{signature[key]!r} vs {predicted[key]!r}",
                        ))
                first_seen[T] = (n, p, signature)
            else:
                ref_n, ref_p, ref_signature = first_seen[T]
                for key in signature:
                    if signature[key] != ref_signature[key]:
                        failures.append(_failure(
                            "type_determinacy", n, p,
                            f"{key} differs from {ref_p} (weight {ref_n}) of the "
                            f"same type: {signature[key]!r} vs {ref_signature[key]!r}",
                        ))
    ms = (time.perf_counter() - start) * 1000
    return CheckResult("type_determinacy", examined, failures, ms)


def run_all(n_max: int, degrees_only: bool = False) -> VerificationReport:
    """Run every verifier for all weights 1..n_max and aggregate one report.

    With degrees_only, only the neighbor-count versus formula comparison runs
    (no graph build, no pair checks); that mode stays cheap at weights where
    the full sweep would not.
    """
    if n_max < 1:
        raise ValueError(f"weight bound must be at least one, got {n_max}")

    def swept(name: str, fn) -> CheckResult:
        merged = CheckResult(name, 0)
        for n in range(1, n_max + 1):
            part = fn(n)
            merged.examined += part.examined
            merged.failures.extend(part.failures)
            merged.ms += part.ms
        return merged

    if degrees_only:
        checks = [swept("degrees", lambda n: verify_degrees(n, with_graph=False))]
    else:
        checks = [
            swept("degrees", verify_degrees),
            swept("neighborhoods", verify_neighborhoods),
            swept("cliques", verify_cliques),
            verify_type_determinacy(n_max),
        ]
    return VerificationReport((1, n_max), checks)
