"""Brute-force enumeration of surface decompositions along multicurves.

A decomposition of Sigma_{g,b} into connected essential pieces is recorded as
an abstract gluing pattern: the multiset of piece signatures together with a
connected multigraph whose nodes are the pieces and whose edges are the cut
curves (a loop is a curve with both sides on one piece).  Realizability of a
piece multiset reduces to integer conditions:

  * the piece Euler characteristics sum to the Euler characteristic of the
    target (chi is additive over cutting);
  * the number of cut curves e = (sum of piece boundary counts - b) / 2 is a
    nonnegative integer and at least m - 1, so a connected pattern can exist;
  * when several pieces are present, each must have boundary to glue along.

These conditions suffice: a degree sequence 1 <= d_i <= b_i with sum 2e always
exists under them, a spanning tree respecting the capacities can be built
greedily, and remaining edges are placed as parallel edges or loops.  Parallel
and loop edges never force isotopic or inessential cut curves, because every
complementary piece has Euler characteristic <= -1, so no annulus or disk can
sit between two cut curves.  Single-piece patterns with loops are allowed:
cutting a closed surface along a non-separating curve leaves one piece.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .formulas import (
    Classification,
    HYPERBOLIC,
    RELATIVELY_HYPERBOLIC,
    THICK,
    witness_threshold,
)
from .surfaces import PieceSig, SurfaceSig, is_essential_piece, is_graph_admissible


@dataclass(frozen=True)
class GluingPattern:
    """Multiset of pieces plus the multigraph of cut curves joining them."""

    pieces: tuple[PieceSig, ...]
    edges: tuple[tuple[int, int], ...]  # (i, j) with i <= j; i == j is a loop

    def degrees(self) -> list[int]:
        deg = [0] * len(self.pieces)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def is_connected(self, skip: Optional[int] = None) -> bool:
        nodes = [i for i in range(len(self.pieces)) if i != skip]
        if not nodes:
            return True
        adj: dict[int, set[int]] = {i: set() for i in nodes}
        for i, j in self.edges:
            if i == skip or j == skip or i == j:
                continue
            adj[i].add(j)
            adj[j].add(i)
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            for nbr in adj[stack.pop()]:
                if nbr not in seen:
                    seen.add(nbr)
                    stack.append(nbr)
        return len(seen) == len(nodes)

    def validate(self, target: SurfaceSig) -> None:
        """Assert the four pattern invariants against the target surface."""
        deg = self.degrees()
        for i, piece in enumerate(self.pieces):
            if deg[i] > piece.b:
                raise AssertionError(f"piece {i} has degree {deg[i]} > {piece.b} boundaries")
        free = sum(p.b for p in self.pieces) - 2 * len(self.edges)
        if free != target.b:
            raise AssertionError(f"free boundary {free} != target b {target.b}")
        if not self.is_connected():
            raise AssertionError("gluing multigraph is disconnected")
        if sum(p.euler for p in self.pieces) != target.euler:
            raise AssertionError("Euler characteristics do not add up")
        derived_g = sum(p.g for p in self.pieces) + len(self.edges) - len(self.pieces) + 1
        if derived_g != target.g:
            raise AssertionError(f"derived genus {derived_g} != target genus {target.g}")

    def to_json(self) -> dict:
        return {
            "pieces": [{"g": p.g, "b": p.b} for p in self.pieces],
            "edges": [[i, j] for i, j in self.edges],
        }


@dataclass(frozen=True)
class CutDecomposition:
    """A realizable piece multiset with one witnessing pattern."""

    pattern: GluingPattern

    @property
    def pieces(self) -> tuple[PieceSig, ...]:
        return self.pattern.pieces

    @property
    def piece_complexities(self) -> tuple[int, ...]:
        return tuple(p.complexity for p in self.pieces)


def _edge_count(pieces: Sequence[PieceSig], target: SurfaceSig) -> Optional[int]:
    """Number of cut curves forced by boundary bookkeeping, or None."""
    diff = sum(p.b for p in pieces) - target.b
    if diff < 0 or diff % 2 != 0:
        return None
    return diff // 2


def gluing_feasible(pieces: Sequence[PieceSig], target: SurfaceSig) -> bool:
    """Decide whether the pieces assemble into the target along a multicurve."""
    if not pieces:
        return False
    if any(not is_essential_piece(p) for p in pieces):
        return False
    if sum(p.euler for p in pieces) != target.euler:
        return False
    m = len(pieces)
    if m >= 2 and any(p.b == 0 for p in pieces):
        return False
    e = _edge_count(pieces, target)
    if e is None or e < m - 1:
        return False
    return True


def _greedy_tree(capacities: list[int]) -> list[tuple[int, int]]:
    """Spanning tree on range(m) with node degrees bounded by capacities.

    Requires every capacity >= 1 and sum >= 2(m-1).  Nodes are attached in
    capacity-descending order to the earliest attached node with slack, which
    always succeeds under the requirement.
    """
    m = len(capacities)
    if m <= 1:
        return []
    residual = list(capacities)
    order = sorted(range(m), key=lambda i: (-capacities[i], i))
    attached = [order[0]]
    edges = []
    for v in order[1:]:
        for u in attached:
            if residual[u] >= 1:
                edges.append((min(u, v), max(u, v)))
                residual[u] -= 1
                residual[v] -= 1
                break
        else:
            raise AssertionError("tree construction ran out of capacity")
        attached.append(v)
    return edges


def _place_extras(edges: list[tuple[int, int]], residual: list[int], count: int) -> None:
    """Append `count` more edges (pairs or loops) respecting residual capacity."""
    for _ in range(count):
        available = [i for i, r in enumerate(residual) if r >= 1]
        if len(available) >= 2:
            i, j = available[0], available[1]
            edges.append((i, j))
            residual[i] -= 1
            residual[j] -= 1
        elif available and residual[available[0]] >= 2:
            i = available[0]
            edges.append((i, i))
            residual[i] -= 2
        else:
            raise AssertionError("extra edge placement ran out of capacity")


def build_pattern(pieces: Sequence[PieceSig], target: SurfaceSig) -> Optional[GluingPattern]:
    """Construct a witnessing pattern for a feasible piece multiset."""
    if not gluing_feasible(pieces, target):
        return None
    pieces = tuple(pieces)
    m = len(pieces)
    e = _edge_count(pieces, target)
    assert e is not None
    edges = _greedy_tree([p.b for p in pieces])
    residual = [p.b for p in pieces]
    for i, j in edges:
        residual[i] -= 1
        residual[j] -= 1
    _place_extras(edges, residual, e - (m - 1))
    pattern = GluingPattern(pieces, tuple(sorted(edges)))
    pattern.validate(target)
    return pattern


def _piece_candidates(chi_budget: int, min_complexity: int) -> list[PieceSig]:
    """Connected essential pieces with euler >= chi_budget meeting the
    complexity floor, in (g, b) lexicographic order."""
    out = []
    for chi in range(chi_budget, 0):
        for g in range((2 - chi) // 2 + 1):
            b = 2 - 2 * g - chi
            if b < 0:
                continue
            sig = SurfaceSig(g, b)
            if sig.complexity >= min_complexity:
                out.append(sig)
    out.sort(key=lambda p: (p.g, p.b))
    return out


def _piece_multisets(
    target: SurfaceSig, min_complexity: int, max_pieces: int
) -> Iterator[tuple[PieceSig, ...]]:
    """All multisets of candidate pieces whose Euler characteristics sum to
    euler(target), emitted in non-decreasing (g, b) lexicographic order."""
    cands = _piece_candidates(target.euler, min_complexity)

    def rec(start: int, budget: int, chosen: list[PieceSig]) -> Iterator[tuple[PieceSig, ...]]:
        if budget == 0:
            if chosen:
                yield tuple(chosen)
            return
        if len(chosen) >= max_pieces:
            return
        for idx in range(start, len(cands)):
            piece = cands[idx]
            if piece.euler < budget:
                continue
            chosen.append(piece)
            yield from rec(idx, budget - piece.euler, chosen)
            chosen.pop()

    yield from rec(0, target.euler, [])


def enumerate_decompositions(
    target: SurfaceSig, min_complexity: int, max_pieces: int
) -> Iterator[CutDecomposition]:
    """Stream every realizable piece multiset (up to multiset equality) with a
    witnessing pattern.  Terminates: pieces have euler <= -1, so at most
    2g-2+b of them fit."""
    if not is_graph_admissible(target):
        raise ValueError(f"target {target} carries no multicurve graphs")
    for pieces in _piece_multisets(target, min_complexity, max_pieces):
        pattern = build_pattern(pieces, target)
        if pattern is not None:
            yield CutDecomposition(pattern)


def max_piece_count_search(target: SurfaceSig, min_complexity: int) -> int:
    """Maximal piece count over all realizable decompositions, by exhaustion."""
    if min_complexity <= 0:
        raise ValueError(f"min_complexity must be >= 1, got {min_complexity}")
    best = 0
    for dec in enumerate_decompositions(target, min_complexity, -target.euler):
        best = max(best, len(dec.pieces))
    return best


def disjoint_pair_certificate(
    target: SurfaceSig, min_complexity: int
) -> Optional[GluingPattern]:
    """A 2-piece decomposition with both complexities >= min_complexity, if any.

    Existence is equivalent to the existence of a pair of disjoint connected
    essential subsurfaces at that complexity: any disjoint pair extends to a
    2-piece decomposition by absorbing the complementary components, and
    absorption only raises complexity.
    """
    if min_complexity <= 0:
        raise ValueError(f"min_complexity must be >= 1, got {min_complexity}")
    for pieces in _piece_multisets(target, min_complexity, 2):
        if len(pieces) == 2:
            pattern = build_pattern(pieces, target)
            if pattern is not None:
                return pattern
    return None


def disjoint_pair_exists(target: SurfaceSig, min_complexity: int) -> bool:
    return disjoint_pair_certificate(target, min_complexity) is not None


@dataclass(frozen=True)
class ThicknessWitness:
    """A decomposition showing two non-complementary co-connected subsurfaces.

    The pieces at positions y and z both meet the complexity floor, at least
    one further piece is present, and the pattern stays connected after
    deleting either distinguished node, i.e. both subsurfaces are co-connected
    but neither is the complement of the other.
    """

    pattern: GluingPattern
    y: int
    z: int

    def validate(self, target: SurfaceSig) -> None:
        self.pattern.validate(target)
        if len(self.pattern.pieces) < 3:
            raise AssertionError("witness needs a third piece")
        if not self.pattern.is_connected(skip=self.y):
            raise AssertionError("first subsurface is not co-connected")
        if not self.pattern.is_connected(skip=self.z):
            raise AssertionError("second subsurface is not co-connected")


def _build_coconnected_pattern(
    pieces: tuple[PieceSig, ...], y: int, z: int, target: SurfaceSig
) -> GluingPattern:
    """Pattern connected after deleting y and after deleting z.

    Skeleton: a capacity-respecting tree on the remaining pieces, one edge
    from y and one from z into that tree, then extra edges anywhere.
    """
    m = len(pieces)
    e = _edge_count(pieces, target)
    assert e is not None
    rest = [i for i in range(m) if i not in (y, z)]
    edges = [
        (min(rest[a], rest[b]), max(rest[a], rest[b]))
        for a, b in _greedy_tree([pieces[i].b for i in rest])
    ]
    residual = [p.b for p in pieces]
    for i, j in edges:
        residual[i] -= 1
        residual[j] -= 1
    for hub in (y, z):
        for r in rest:
            if residual[r] >= 1:
                edges.append((min(hub, r), max(hub, r)))
                residual[hub] -= 1
                residual[r] -= 1
                break
        else:
            raise AssertionError("no attachment capacity left on the rest pieces")
    _place_extras(edges, residual, e - len(edges))
    return GluingPattern(pieces, tuple(sorted(edges)))


def find_thickness_witness(
    target: SurfaceSig, min_complexity: int
) -> Optional[ThicknessWitness]:
    """Search for two disjoint co-connected subsurfaces at the complexity
    floor whose union fails to exhaust the surface.

    For a fixed piece multiset with distinguished positions y, z and j >= 1
    remaining pieces, a doubly co-connected pattern exists iff the multiset is
    realizable and the remaining pieces carry total boundary >= 2j: deleting
    either hub must leave a connected graph on the other j + 1 nodes, which
    forces that capacity, and the skeleton construction attains it.
    """
    if min_complexity <= 0:
        raise ValueError(f"min_complexity must be >= 1, got {min_complexity}")
    for pieces in _piece_multisets(target, 0, -target.euler):
        if len(pieces) < 3 or not gluing_feasible(pieces, target):
            continue
        big = [i for i, p in enumerate(pieces) if p.complexity >= min_complexity]
        if len(big) < 2:
            continue
        seen: set[tuple[PieceSig, PieceSig]] = set()
        for y, z in itertools.combinations(big, 2):
            key = (pieces[y], pieces[z])
            if key in seen:
                continue
            seen.add(key)
            rest_b = sum(p.b for i, p in enumerate(pieces) if i not in (y, z))
            if rest_b < 2 * (len(pieces) - 2):
                continue
            witness = ThicknessWitness(
                _build_coconnected_pattern(pieces, y, z, target), y, z
            )
            witness.validate(target)
            return witness
    return None


def disjoint_pairs_are_complements(target: SurfaceSig, min_complexity: int) -> bool:
    """True when every disjoint pair of co-connected subsurfaces at the floor
    consists of complementary subsurfaces (no thickness witness exists)."""
    return find_thickness_witness(target, min_complexity) is None


def classify_exhaustive(sig: SurfaceSig, k: int) -> Classification:
    """Classification of the k-multicurve graph adjudicated by the oracle.

    With t the witness threshold for k: hyperbolic iff no disjoint pair of
    witnesses exists; relatively hyperbolic iff disjoint pairs exist but all
    co-connected disjoint pairs are complementary; thick otherwise.
    """
    if sig.complexity < 2:
        raise ValueError(f"classification assumes complexity >= 2, got {sig}")
    if not 1 <= k <= sig.complexity:
        raise ValueError(f"k must lie in [1, {sig.complexity}] for {sig}, got {k}")
    t = witness_threshold(sig, k)
    if not disjoint_pair_exists(sig, t):
        return Classification(HYPERBOLIC, "oracle")
    if disjoint_pairs_are_complements(sig, t):
        return Classification(RELATIVELY_HYPERBOLIC, "oracle")
    return Classification(THICK, "oracle")
