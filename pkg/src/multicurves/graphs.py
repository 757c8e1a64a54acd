"""Finite induced subgraphs of multicurve graphs and interpolating graphs.

Vertices are drawn from a bounded-weight curve inventory, so every instance
is an induced subgraph of the infinite graph: adjacency is exact, BFS
distances are upper bounds for the true distances.  All tie-breaking is
lexicographic on canonical weight vectors, so builds and certificates are
reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .curves import (
    Multicurve,
    Vector,
    canonical_multicurve,
    cut_pieces,
    disjoint_curves,
    enumerate_curves,
    multicurve_to_json,
)
from .surfaces import SurfaceSig
from .triangulations import Triangulation, triangulate


class IncompleteInventory(Exception):
    """The bounded inventory has no completion for the requested extension."""


def _pair_table(tri: Triangulation, inventory: Sequence[Vector]):
    table: dict[tuple[Vector, Vector], bool] = {}
    for i, a in enumerate(inventory):
        for b in inventory[i + 1 :]:
            table[(a, b)] = disjoint_curves(tri, a, b)

    def lookup(a: Vector, b: Vector) -> bool:
        if a == b:
            return True
        key = (a, b) if a < b else (b, a)
        if key not in table:
            table[key] = disjoint_curves(tri, *key)
        return table[key]

    return lookup


def multicurve_vertices(
    tri: Triangulation,
    k: int,
    inventory: Sequence[Vector],
    disjoint_fn: Optional[Callable[[Vector, Vector], bool]] = None,
) -> tuple[Multicurve, ...]:
    """All k-subsets of the inventory that are pairwise disjoint, sorted.

    Valid for 1 <= k <= complexity; with k equal to the complexity these are
    the pants decompositions available in the inventory.
    """
    if not 1 <= k <= tri.sig.complexity:
        raise ValueError(f"k must lie in [1, {tri.sig.complexity}], got {k}")
    if disjoint_fn is None:
        disjoint_fn = _pair_table(tri, inventory)
    inventory = sorted(inventory)
    out: list[Multicurve] = []

    def grow(start: int, chosen: list[Vector]) -> None:
        if len(chosen) == k:
            out.append(tuple(chosen))
            return
        for idx in range(start, len(inventory)):
            c = inventory[idx]
            if all(disjoint_fn(c, x) for x in chosen):
                chosen.append(c)
                grow(idx + 1, chosen)
                chosen.pop()

    grow(0, [])
    return tuple(out)


def is_edge_multicurve(
    tri: Triangulation,
    k: int,
    alpha: Multicurve,
    beta: Multicurve,
    disjoint_fn: Optional[Callable[[Vector, Vector], bool]] = None,
) -> bool:
    """Adjacency in the k-multicurve graph: k-1 shared components and the two
    leftover curves disjoint.  The pants-graph endpoint k = complexity needs a
    minimal-intersection test this engine does not provide, so it is refused."""
    if k >= tri.sig.complexity:
        raise ValueError("adjacency for k = complexity (pants graph) is unsupported")
    if len(alpha) != k or len(beta) != k:
        raise ValueError("vertices must be k-multicurves")
    if alpha == beta:
        return False
    shared = set(alpha) & set(beta)
    if len(shared) != k - 1:
        return False
    (a,) = set(alpha) - shared
    (b,) = set(beta) - shared
    if disjoint_fn is None:
        return disjoint_curves(tri, a, b)
    return disjoint_fn(a, b)


def differing_support_complexity(tri: Triangulation, shared: Sequence[Vector]) -> int:
    """Total complexity of the complement pieces that are not pants.

    For pants decompositions alpha, beta with shared part nu, each piece of
    the nu-complement inherits pants decompositions from alpha and from beta
    that share no curve, so alpha and beta differ in every piece of positive
    complexity and agree elsewhere.  The union of those pieces is therefore
    the minimal subsurface compatible with both outside which they agree, and
    any qualifying subsurface contains it; thresholding it is equivalent to
    the existential definition.  Its complexity also equals
    complexity(surface) - len(shared) by additivity.
    """
    pieces = cut_pieces(tri, tuple(shared))
    return sum(c for c in pieces.complexities() if c >= 1)


def is_edge_interpolating(
    tri: Triangulation, xi: int, alpha: Multicurve, beta: Multicurve
) -> bool:
    """Adjacency in the interpolating graph with complexity parameter xi.

    Covers the elementary-move condition automatically for xi >= 1: an
    elementary move changes one curve inside a complexity-1 compatible piece.
    """
    if xi < 1:
        raise ValueError("interpolating adjacency needs xi >= 1")
    xi0 = tri.sig.complexity
    if len(alpha) != xi0 or len(beta) != xi0:
        raise ValueError("vertices must be pants decompositions")
    if alpha == beta:
        return False
    shared = tuple(sorted(set(alpha) & set(beta)))
    return differing_support_complexity(tri, shared) <= xi


@dataclass
class MulticurveGraph:
    """Induced subgraph over a bounded-weight inventory."""

    tri: Triangulation
    kind: str  # "multicurve" or "interpolating"
    param: int  # k, or xi
    max_weight: int
    inventory: tuple[Vector, ...]
    vertices: tuple[Multicurve, ...]
    adjacency: tuple[frozenset[int], ...]
    _index: dict[Multicurve, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._index:
            self._index = {v: i for i, v in enumerate(self.vertices)}

    def index(self, vertex: Multicurve) -> int:
        return self._index[canonical_multicurve(vertex)]

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self):
        for i, nbrs in enumerate(self.adjacency):
            for j in sorted(nbrs):
                if i < j:
                    yield (i, j)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "param": self.param,
            "max_weight": self.max_weight,
            "surface": {"g": self.tri.sig.g, "b": self.tri.sig.b},
            "vertices": [multicurve_to_json(v) for v in self.vertices],
            "edges": [[i, j] for i, j in self.edges()],
        }

    def to_dot(self) -> str:
        lines = [f'graph "{self.kind}_{self.param}" {{']
        for i, v in enumerate(self.vertices):
            label = "|".join(",".join(map(str, c)) for c in v)
            lines.append(f'  v{i} [label="{label}"];')
        for i, j in self.edges():
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(
    tri: Triangulation, kind: str, param: int, max_weight: int
) -> MulticurveGraph:
    """Assemble the induced multicurve or interpolating graph instance.

    Multicurve graphs accept 1 <= k <= complexity - 1 and interpolating
    graphs 1 <= xi <= complexity - 1; both endpoint parameters are refused
    (pants-graph adjacency needs intersection counts, and xi = 0 adds no
    edges beyond them).
    """
    xi0 = tri.sig.complexity
    if kind not in ("multicurve", "interpolating"):
        raise ValueError(f"unknown graph kind {kind!r}")
    if not 1 <= param <= xi0 - 1:
        raise ValueError(f"parameter must lie in [1, {xi0 - 1}], got {param}")
    inventory = enumerate_curves(tri, max_weight)
    lookup = _pair_table(tri, inventory)
    if kind == "multicurve":
        vertices = multicurve_vertices(tri, param, inventory, lookup)
        adjacency = [set() for _ in vertices]
        for i, alpha in enumerate(vertices):
            for j in range(i + 1, len(vertices)):
                if is_edge_multicurve(tri, param, alpha, vertices[j], lookup):
                    adjacency[i].add(j)
                    adjacency[j].add(i)
    else:
        vertices = multicurve_vertices(tri, xi0, inventory, lookup)
        adjacency = [set() for _ in vertices]
        support_cache: dict[tuple[Vector, ...], int] = {}
        for i, alpha in enumerate(vertices):
            for j in range(i + 1, len(vertices)):
                beta = vertices[j]
                shared = tuple(sorted(set(alpha) & set(beta)))
                if shared not in support_cache:
                    support_cache[shared] = differing_support_complexity(tri, shared)
                if support_cache[shared] <= param:
                    adjacency[i].add(j)
                    adjacency[j].add(i)
    return MulticurveGraph(
        tri=tri,
        kind=kind,
        param=param,
        max_weight=max_weight,
        inventory=inventory,
        vertices=tuple(vertices),
        adjacency=tuple(frozenset(s) for s in adjacency),
    )


def extend_to_pants(
    tri: Triangulation,
    alpha: Multicurve,
    inventory: Sequence[Vector],
    disjoint_fn: Optional[Callable[[Vector, Vector], bool]] = None,
) -> Multicurve:
    """Lexicographically least completion of a multicurve to a pants
    decomposition using inventory curves.  Raises IncompleteInventory when no
    completion exists within the inventory; never fails silently."""
    if disjoint_fn is None:
        disjoint_fn = _pair_table(tri, sorted(set(inventory) | set(alpha)))
    alpha = canonical_multicurve(alpha)
    need = tri.sig.complexity - len(alpha)
    if need < 0:
        raise ValueError("multicurve is larger than a pants decomposition")
    if need == 0:
        return alpha
    candidates = sorted(
        c
        for c in set(inventory)
        if c not in alpha and all(disjoint_fn(c, a) for a in alpha)
    )

    def search(start: int, chosen: list[Vector]) -> Optional[list[Vector]]:
        if len(chosen) == need:
            return chosen
        for idx in range(start, len(candidates)):
            c = candidates[idx]
            if all(disjoint_fn(c, x) for x in chosen):
                chosen.append(c)
                result = search(idx + 1, chosen)
                if result is not None:
                    return result
                chosen.pop()
        return None

    added = search(0, [])
    if added is None:
        raise IncompleteInventory(f"no pants completion of {alpha} in the inventory")
    return canonical_multicurve(list(alpha) + added)


# The quasi-isometry comparison map sends a k-multicurve to its canonical
# pants extension; determinism comes from the lexicographic completion.
pants_image = extend_to_pants


def extensions_adjacent(
    tri: Triangulation, k: int, alpha: Multicurve, ext1: Multicurve, ext2: Multicurve
) -> bool:
    """Any two pants extensions of one k-multicurve are equal or adjacent in
    the interpolating graph with parameter complexity - k: they agree on the
    complement of the multicurve, whose complexity is exactly that.  A False
    return signals an engine bug rather than a mathematical possibility."""
    alpha = canonical_multicurve(alpha)
    for ext in (ext1, ext2):
        if not set(alpha) <= set(ext):
            raise ValueError("extension does not contain the multicurve")
    if ext1 == ext2:
        return True
    return is_edge_interpolating(tri, tri.sig.complexity - k, ext1, ext2)


def upper_bound_certificate(
    tri: Triangulation,
    k: int,
    alpha: Multicurve,
    beta: Multicurve,
    inventory: Sequence[Vector],
    disjoint_fn: Optional[Callable[[Vector, Vector], bool]] = None,
) -> tuple[Multicurve, ...]:
    """For adjacent k-multicurves, a path of length <= 2 between their pants
    images through a common extension of the union, certifying that the
    comparison map is 2-Lipschitz edgewise."""
    if not is_edge_multicurve(tri, k, alpha, beta, disjoint_fn):
        raise ValueError("certificate requires an adjacent pair")
    union = canonical_multicurve(set(alpha) | set(beta))
    bridge = extend_to_pants(tri, union, inventory, disjoint_fn)
    image_a = extend_to_pants(tri, alpha, inventory, disjoint_fn)
    image_b = extend_to_pants(tri, beta, inventory, disjoint_fn)
    path = [image_a]
    for vertex in (bridge, image_b):
        if vertex != path[-1]:
            path.append(vertex)
    xi = tri.sig.complexity - k
    for u, v in zip(path, path[1:]):
        if not is_edge_interpolating(tri, xi, u, v):
            raise AssertionError("certificate step is not an edge")
    if len(path) > 3:
        raise AssertionError("certificate longer than two steps")
    return tuple(path)


def replacement_path(
    tri: Triangulation,
    k: int,
    pants: Multicurve,
    start: Multicurve,
    end: Multicurve,
    disjoint_fn: Optional[Callable[[Vector, Vector], bool]] = None,
) -> tuple[Multicurve, ...]:
    """Walk between two k-submulticurves of one pants decomposition, swapping
    one curve per step.  Steps = |end - start| <= min(k, complexity - k)."""
    if not (set(start) <= set(pants) and set(end) <= set(pants)):
        raise ValueError("both multicurves must sit inside the pants decomposition")
    removes = sorted(set(start) - set(end))
    adds = sorted(set(end) - set(start))
    assert len(removes) == len(adds)
    current = list(start)
    path = [canonical_multicurve(current)]
    for out_curve, in_curve in zip(removes, adds):
        current.remove(out_curve)
        current.append(in_curve)
        path.append(canonical_multicurve(current))
    for u, v in zip(path, path[1:]):
        if not is_edge_multicurve(tri, k, u, v, disjoint_fn):
            raise AssertionError("replacement step is not an edge")
    return tuple(path)


@dataclass(frozen=True)
class PathLift:
    """Lift of an interpolating-graph path back to the k-multicurve graph.

    lifts[i] sits inside both endpoints of the i-th path edge; segments are
    the explicit swap paths, each of length at most the lifting constant
    min(k, complexity - k); their concatenation walks from the start
    multicurve to the end multicurve in at most (n + 1) * constant steps.
    """

    path: tuple[Multicurve, ...]
    lifts: tuple[Multicurve, ...]
    segments: tuple[tuple[Multicurve, ...], ...]
    constant: int

    @property
    def step_lengths(self) -> tuple[int, ...]:
        return tuple(len(seg) - 1 for seg in self.segments)

    @property
    def total_length(self) -> int:
        return sum(self.step_lengths)


def lift_path(
    tri: Triangulation,
    k: int,
    path: Sequence[Multicurve],
    alpha: Optional[Multicurve] = None,
    beta: Optional[Multicurve] = None,
    disjoint_fn: Optional[Callable[[Vector, Vector], bool]] = None,
) -> PathLift:
    """Lift an interpolating path to the k-multicurve graph.

    Every edge of the path shares at least k curves (the coinciding part of
    an edge has complexity >= complexity - xi = k), so the lexicographically
    least k shared curves give the lift; consecutive lifts live inside a
    common pants decomposition and are joined by swap paths.  When alpha and
    beta are supplied they must sit inside the first and last path vertices
    and the lift is closed up to a full walk from alpha to beta.
    """
    xi0 = tri.sig.complexity
    xi = xi0 - k
    path = [canonical_multicurve(p) for p in path]
    if not path:
        raise ValueError("empty path")
    for u, v in zip(path, path[1:]):
        if not is_edge_interpolating(tri, xi, u, v):
            raise ValueError("consecutive path vertices are not adjacent")
    constant = min(k, xi0 - k)
    lifts: list[Multicurve] = []
    for u, v in zip(path, path[1:]):
        shared = sorted(set(u) & set(v))
        if len(shared) < k:
            raise AssertionError("edge shares fewer than k curves")
        lifts.append(tuple(shared[:k]))
    segments: list[tuple[Multicurve, ...]] = []
    stations = list(lifts)
    if alpha is not None:
        stations = [canonical_multicurve(alpha)] + stations
    if beta is not None:
        stations = stations + [canonical_multicurve(beta)]
    # Station i and i+1 both sit inside a common path vertex.
    hosts = list(path) if alpha is not None else list(path[1:])
    for i in range(len(stations) - 1):
        seg = replacement_path(tri, k, hosts[i], stations[i], stations[i + 1], disjoint_fn)
        if len(seg) - 1 > constant:
            raise AssertionError("swap path exceeds the lifting constant")
        segments.append(seg)
    return PathLift(
        path=tuple(path),
        lifts=tuple(lifts),
        segments=tuple(segments),
        constant=constant,
    )


def bfs_distance(graph: MulticurveGraph, u: int, v: int) -> Optional[int]:
    """Shortest path length in the instance; None when unreachable.  An upper
    bound for the distance in the infinite graph."""
    n = len(graph.vertices)
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError("unknown vertex index")
    if u == v:
        return 0
    dist = {u: 0}
    frontier = [u]
    while frontier:
        nxt = []
        for node in frontier:
            for nbr in sorted(graph.adjacency[node]):
                if nbr not in dist:
                    dist[nbr] = dist[node] + 1
                    if nbr == v:
                        return dist[nbr]
                    nxt.append(nbr)
        frontier = nxt
    return None


def bfs_path(graph: MulticurveGraph, u: int, v: int) -> Optional[list[int]]:
    """One shortest path with lexicographic predecessor tie-breaks."""
    if u == v:
        return [u]
    parent = {u: None}
    frontier = [u]
    while frontier and v not in parent:
        nxt = []
        for node in frontier:
            for nbr in sorted(graph.adjacency[node]):
                if nbr not in parent:
                    parent[nbr] = node
                    nxt.append(nbr)
        frontier = nxt
    if v not in parent:
        return None
    out = [v]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return out[::-1]


@dataclass(frozen=True)
class WitnessReport:
    """Threshold and finite-inventory verdicts for one complementary piece."""

    piece: SurfaceSig
    threshold: int
    threshold_verdict: bool
    checked_vertices: int
    inventory_verdict: bool
    avoiding_vertex: Optional[Multicurve]


def witness_report(
    tri: Triangulation,
    k: int,
    pieces,
    piece_idx: int,
    vertices: Sequence[Multicurve],
) -> WitnessReport:
    """Check one piece of a multicurve complement against the witness
    criterion for k-multicurve graphs.

    The threshold verdict compares the piece complexity with 3g-2+b-k; the
    inventory verdict checks that every supplied vertex meets the piece.  A
    sub-threshold piece must eventually acquire an avoiding vertex as the
    inventory grows; an above-threshold piece can never have one.
    """
    if not 0 <= piece_idx < len(pieces.pieces):
        raise ValueError("piece index out of range")
    piece = pieces.pieces[piece_idx]
    threshold = 3 * tri.sig.g - 2 + tri.sig.b - k
    threshold_verdict = piece.complexity >= threshold
    avoiding = None
    for vertex in vertices:
        if not any(pieces.meets_piece(piece_idx, c) for c in vertex):
            avoiding = vertex
            break
    return WitnessReport(
        piece=piece,
        threshold=threshold,
        threshold_verdict=threshold_verdict,
        checked_vertices=len(vertices),
        inventory_verdict=avoiding is None,
        avoiding_vertex=avoiding,
    )


@dataclass
class QiSuiteReport:
    """Outcome of the quasi-isometry verification suite for one (surface, k)."""

    sig: SurfaceSig
    k: int
    max_weight: int
    seed: int
    inventory_size: int = 0
    multicurve_vertices: int = 0
    interpolating_vertices: int = 0
    extension_pairs: int = 0
    extension_failures: int = 0
    edge_certificates: int = 0
    edge_failures: int = 0
    incomplete_inventory: int = 0
    lifted_paths: int = 0
    lift_failures: int = 0
    density_vertices: int = 0
    density_failures: int = 0

    @property
    def passed(self) -> bool:
        return (
            self.extension_failures == 0
            and self.edge_failures == 0
            and self.lift_failures == 0
            and self.density_failures == 0
        )

    def lines(self) -> list[str]:
        status = "pass" if self.passed else "FAIL"
        return [
            f"qi-suite {self.sig} k={self.k} max-weight={self.max_weight} seed={self.seed}",
            f"  inventory: {self.inventory_size} curves, "
            f"{self.multicurve_vertices} multicurve vertices, "
            f"{self.interpolating_vertices} pants vertices",
            f"  extension pairs: {self.extension_pairs} checked, "
            f"{self.extension_failures} failures",
            f"  edge certificates: {self.edge_certificates} built, "
            f"{self.edge_failures} failures, "
            f"{self.incomplete_inventory} incomplete-inventory",
            f"  path lifts: {self.lifted_paths} sampled, {self.lift_failures} failures",
            f"  quasi-density: {self.density_vertices} vertices, "
            f"{self.density_failures} beyond radius 1",
            f"  result: {status}",
        ]


def run_qi_suite(
    sig: SurfaceSig, k: int, max_weight: int, samples: int, seed: int
) -> QiSuiteReport:
    """Exhaustive extension and edge checks plus sampled path lifts and the
    radius-1 density check, deterministic under the seed."""
    tri = triangulate(sig)
    xi0 = sig.complexity
    if not 1 <= k <= xi0 - 1:
        raise ValueError(f"k must lie in [1, {xi0 - 1}], got {k}")
    report = QiSuiteReport(sig=sig, k=k, max_weight=max_weight, seed=seed)

    inventory = enumerate_curves(tri, max_weight)
    lookup = _pair_table(tri, inventory)
    report.inventory_size = len(inventory)
    mgraph = build_graph(tri, "multicurve", k, max_weight)
    igraph = build_graph(tri, "interpolating", xi0 - k, max_weight)
    report.multicurve_vertices = len(mgraph.vertices)
    report.interpolating_vertices = len(igraph.vertices)

    # Pants extensions of every multicurve vertex, and the comparison images.
    completions: dict[Multicurve, list[Multicurve]] = {v: [] for v in mgraph.vertices}
    for pants in igraph.vertices:
        for vertex in completions:
            if set(vertex) <= set(pants):
                completions[vertex].append(pants)
    images: dict[Multicurve, Multicurve] = {}
    for vertex in mgraph.vertices:
        try:
            images[vertex] = extend_to_pants(tri, vertex, inventory, lookup)
        except IncompleteInventory:
            report.incomplete_inventory += 1

    # Extension check: all completions of one multicurve are mutually equal
    # or adjacent, exhaustively over inventory completions.
    for vertex, pants_list in completions.items():
        for ext1, ext2 in itertools.combinations(pants_list, 2):
            report.extension_pairs += 1
            if not extensions_adjacent(tri, k, vertex, ext1, ext2):
                report.extension_failures += 1

    # Edge-level upper bound: a two-step certificate for every instance edge.
    for i, j in mgraph.edges():
        alpha, beta = mgraph.vertices[i], mgraph.vertices[j]
        try:
            upper_bound_certificate(tri, k, alpha, beta, inventory, lookup)
            report.edge_certificates += 1
        except IncompleteInventory:
            report.incomplete_inventory += 1
        except AssertionError:
            report.edge_failures += 1

    # Sampled interpolating paths lift with steps <= min(k, xi0-k).
    rng = random.Random(seed)
    liftable = sorted(images)
    constant = min(k, xi0 - k)
    attempts = 0
    while report.lifted_paths < samples and attempts < 20 * samples and len(liftable) >= 2:
        attempts += 1
        alpha, beta = rng.sample(liftable, 2)
        start = igraph.index(images[alpha])
        goal = igraph.index(images[beta])
        hops = bfs_path(igraph, start, goal)
        if hops is None:
            continue
        path = [igraph.vertices[i] for i in hops]
        try:
            lift = lift_path(tri, k, path, alpha=alpha, beta=beta, disjoint_fn=lookup)
        except (AssertionError, ValueError):
            report.lift_failures += 1
            continue
        n = len(path) - 1
        if lift.total_length > (n + 1) * constant or any(
            step > constant for step in lift.step_lengths
        ):
            report.lift_failures += 1
        else:
            report.lifted_paths += 1

    # Radius-1 quasi-density of the comparison map over the instance.
    image_indices = {igraph.index(p) for p in images.values()}
    for idx in range(len(igraph.vertices)):
        report.density_vertices += 1
        if idx in image_indices:
            continue
        if not image_indices & igraph.adjacency[idx]:
            report.density_failures += 1

    return report
