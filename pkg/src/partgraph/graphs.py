"""Concrete graphs: the transfer graph on all partitions of n, induced
neighborhoods labeled by moves, line graphs, and maximal-clique search.

The load-bearing fact checked here is that the neighborhood of a partition,
as an induced subgraph of the transfer graph, coincides edge for edge with
the line graph of its admissibility graph under the move labeling.  Cliques
of a line graph of a bipartite graph come from stars, which is what makes
the clique classification exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Iterable, Iterator

from .local_model import AdmissibilityGraph
from .partitions import Partition, enumerate_partitions
from .transfers import TransferMove, are_adjacent, neighbors


@dataclass(frozen=True)
class SimpleGraph:
    """An undirected simple graph over an ordered tuple of opaque labels.

    Edges are stored as index pairs (a, b) with a < b into the label tuple.
    """

    labels: tuple[Any, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for a, b in self.edges:
            if not (0 <= a < b < len(self.labels)):
                raise ValueError(f"edge ({a}, {b}) invalid for {len(self.labels)} vertices")

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for a, b in self.edges if v in (a, b))

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors_of(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def to_json(self) -> dict:
        return {
            "labels": [label_json(label) for label in self.labels],
            "edges": [list(edge) for edge in self.sorted_edges()],
        }

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for idx, label in enumerate(self.labels):
            lines.append(f'  {idx} [label="{label}"];')
        for a, b in self.sorted_edges():
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def label_json(label: Any) -> Any:
    if isinstance(label, Partition):
        return list(label.parts)
    if isinstance(label, TransferMove):
        return label.to_json()
    if isinstance(label, tuple):
        return list(label)
    return label


def build_partition_graph(n: int) -> SimpleGraph:
    """The graph on all partitions of n, joined when a single cell transfer
    maps one to the other."""
    vertices = enumerate_partitions(n)
    edges = frozenset(
        (a, b)
        for a, b in combinations(range(len(vertices)), 2)
        if are_adjacent(vertices[a], vertices[b])
    )
    return SimpleGraph(tuple(vertices), edges)


def induced_neighborhood(n: int, p: Partition) -> SimpleGraph:
    """The subgraph induced on the neighbors of p, labeled by the moves reaching them."""
    if p.weight != n:
        raise ValueError(f"{p} has weight {p.weight}, not {n}")
    nbrs = neighbors(p)
    moves = sorted(nbrs)
    targets = [nbrs[move] for move in moves]
    edges = frozenset(
        (a, b)
        for a, b in combinations(range(len(moves)), 2)
        if are_adjacent(targets[a], targets[b])
    )
    return SimpleGraph(tuple(moves), edges)


def line_graph(B: AdmissibilityGraph) -> SimpleGraph:
    """Vertices are the edges of B, labeled as moves; adjacency is sharing an endpoint."""
    moves = [TransferMove(i, j) for i, j in B.sorted_edges()]
    edges = frozenset(
        (a, b)
        for a, b in combinations(range(len(moves)), 2)
        if moves[a].i == moves[b].i or moves[a].j == moves[b].j
    )
    return SimpleGraph(tuple(moves), edges)


@dataclass(frozen=True)
class PairCheck:
    """One violating pair: adjacency of the targets disagreed with corner sharing."""

    first: TransferMove
    second: TransferMove
    adjacent_in_graph: bool
    share_corner: bool


@dataclass(frozen=True)
class NeighborhoodCheck:
    partition: Partition
    moves: tuple[TransferMove, ...]
    pairs_checked: int
    adjacent_pairs: int
    violations: tuple[PairCheck, ...]

    @property
    def verified(self) -> bool:
        return not self.violations


def verify_line_graph_theorem(n: int, p: Partition) -> NeighborhoodCheck:
    """Check every pair of neighbors of p: adjacent in the weight-n transfer
    graph exactly when their moves share a removable or an addable corner.

    The two sides are computed independently: adjacency goes through the
    conjugate-coordinate test on the actual neighbor partitions, corner
    sharing looks only at the move labels.
    """
    if p.weight != n:
        raise ValueError(f"{p} has weight {p.weight}, not {n}")
    nbrs = neighbors(p)
    moves = sorted(nbrs)
    violations = []
    adjacent_pairs = 0
    pairs_checked = 0
    for a, b in combinations(moves, 2):
        pairs_checked += 1
        adjacent = are_adjacent(nbrs[a], nbrs[b])
        share = a.i == b.i or a.j == b.j
        if adjacent:
            adjacent_pairs += 1
        if adjacent != share:
            violations.append(PairCheck(a, b, adjacent, share))
    return NeighborhoodCheck(p, tuple(moves), pairs_checked, adjacent_pairs, tuple(violations))


def _maximal_cliques(graph: SimpleGraph) -> Iterator[frozenset[int]]:
    # Bron-Kerbosch with a max-degree pivot; deterministic because candidate
    # iteration and pivot tie-breaks are index-ordered.
    adj: list[set[int]] = [set() for _ in range(graph.vertex_count)]
    for a, b in graph.edges:
        adj[a].add(b)
        adj[b].add(a)

    def expand(clique: set[int], candidates: set[int], excluded: set[int]) -> Iterator[frozenset[int]]:
        if not candidates and not excluded:
            if clique:
                yield frozenset(clique)
            return
        pivot = max(candidates | excluded, key=lambda v: (len(adj[v] & candidates), -v))
        for v in sorted(candidates - adj[pivot]):
            yield from expand(clique | {v}, candidates & adj[v], excluded & adj[v])
            candidates.remove(v)
            excluded.add(v)

    yield from expand(set(), set(range(graph.vertex_count)), set())


def cliques_through(n: int, p: Partition) -> list[tuple[TransferMove, ...]]:
    """All maximal cliques of the neighborhood of p, as sorted move tuples.

    Adjoining p itself to any of them gives a maximal clique of the full
    transfer graph through p.  An isolated partition yields the empty list.
    """
    graph = induced_neighborhood(n, p)
    found = [
        tuple(graph.labels[v] for v in sorted(clique))
        for clique in _maximal_cliques(graph)
    ]
    return sorted(found)


class CliqueClassificationError(ValueError):
    """The moves share no corner, which never happens for a genuine clique."""


@dataclass(frozen=True)
class CliqueClassification:
    """Which corner a clique of moves has in common.

    kind is "star" (common removable corner), "top" (common addable corner),
    or "both" for a single move, which fixes one corner on each side.
    """

    kind: str
    removable: int | None
    addable: int | None
    members: frozenset[TransferMove]


def classify_clique(moves: Iterable[TransferMove]) -> CliqueClassification:
    """Classify a clique of moves by its shared corner.

    Pairwise-adjacent edges of a bipartite graph always run through one
    common endpoint, so a clique that fits neither pattern is an error.
    """
    members = frozenset(moves)
    if not members:
        raise ValueError("cannot classify an empty set of moves")
    removable = {move.i for move in members}
    addable = {move.j for move in members}
    share_i = len(removable) == 1
    share_j = len(addable) == 1
    if share_i and share_j:
        return CliqueClassification("both", next(iter(removable)), next(iter(addable)), members)
    if share_i:
        return CliqueClassification("star", next(iter(removable)), None, members)
    if share_j:
        return CliqueClassification("top", None, next(iter(addable)), members)
    raise CliqueClassificationError(
        f"moves {[str(m) for m in sorted(members)]} share no removable or addable corner"
    )
