"""Exact normal-coordinate engine for multicurves on a triangulated surface.

A multicurve is stored by its normal coordinates: one nonnegative integer per
edge counting intersections with the normal representative.  Inside a triangle
with slot weights (w0, w1, w2) the arcs split into three corner families;
corner j carries x_j parallel arcs with

    x_j = (w_{j-1} + w_j - w_{j+1}) / 2   (indices mod 3),

so a vector is admissible iff every triangle has even weight sum and
nonnegative corner counts.  Admissible vectors are closed under addition
(the Haken sum).  Each isotopy class of multicurve without trivial components
has a unique normal representative, so coordinate equality decides isotopy
and tracing the strands of a sum decides disjointness.  On a closed surface
(one material vertex) coordinates refine isotopy: classes related by sliding
across the vertex may get distinct vectors, which is harmless for the sound
disjointness and cutting uses made here.

Positions along an edge follow side 0 of the edge; side 1 sees the reversed
order.  Within a slot, the x_j corner-j arcs sit nearest vertex j: on slot j
they occupy positions 0..x_j-1 counted from the slot start, and on slot j-1
positions w_{j-1}-1 down to w_{j-1}-x_j.  The d-th arc of corner j (d = 0
innermost) therefore joins position (w_{j-1}-1-d) of slot j-1 to position d
of slot j.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence

from .surfaces import SurfaceSig
from .triangulations import Triangulation

Vector = tuple[int, ...]
Multicurve = tuple[Vector, ...]  # sorted component vectors, repeats allowed


def add_vectors(vectors: Iterable[Vector]) -> Vector:
    total = None
    for v in vectors:
        if total is None:
            total = list(v)
        else:
            for i, x in enumerate(v):
                total[i] += x
    if total is None:
        raise ValueError("need at least one vector")
    return tuple(total)


def canonical_multicurve(components: Iterable[Vector]) -> Multicurve:
    return tuple(sorted(tuple(c) for c in components))


def corner_counts(tri: Triangulation, weights: Vector):
    """Per-triangle corner arc counts, or None when the vector is inadmissible."""
    if len(weights) != tri.num_edges:
        raise ValueError(f"expected {tri.num_edges} weights, got {len(weights)}")
    out = []
    for corners in tri.triangles:
        w = [weights[e] for e, _ in corners]
        if (w[0] + w[1] + w[2]) % 2:
            return None
        x = (
            (w[2] + w[0] - w[1]) // 2,
            (w[0] + w[1] - w[2]) // 2,
            (w[1] + w[2] - w[0]) // 2,
        )
        if min(x) < 0:
            return None
        out.append(x)
    return out


def is_admissible(tri: Triangulation, weights: Vector) -> bool:
    if any(w < 0 for w in weights):
        return False
    return corner_counts(tri, weights) is not None


class Drawing:
    """The normal representative of an admissible vector, strand by strand.

    Exposes the individual arcs (triangle, corner, nesting depth), the owning
    component instance of every arc and of every edge point, and the traced
    component instances themselves.  Parallel copies of a component are
    separate instances with equal vectors.
    """

    def __init__(self, tri: Triangulation, weights: Vector):
        self.tri = tri
        self.weights = tuple(weights)
        counts = corner_counts(tri, self.weights)
        if counts is None:
            raise ValueError(f"vector {weights} is not admissible")
        self.corners = counts

        self.arcs: list[tuple[int, int, int]] = []
        for t in range(tri.num_triangles):
            for j in range(3):
                for d in range(counts[t][j]):
                    self.arcs.append((t, j, d))

        point_arcs: dict[tuple[int, int], list[int]] = {}
        self.arc_points: list[tuple[tuple[int, int], tuple[int, int]]] = []
        for i, arc in enumerate(self.arcs):
            p1, p2 = self._arc_endpoints(arc)
            self.arc_points.append((p1, p2))
            point_arcs.setdefault(p1, []).append(i)
            point_arcs.setdefault(p2, []).append(i)
        if len(point_arcs) != sum(self.weights):
            raise AssertionError("arc endpoints do not cover the edge points")
        for point, owners in point_arcs.items():
            if len(owners) != 2:
                raise AssertionError(f"point {point} lies on {len(owners)} arcs")

        # Walk the 2-regular arc adjacency to split off component instances.
        self.arc_instance = [-1] * len(self.arcs)
        self.instance_arcs: list[list[int]] = []
        for start in range(len(self.arcs)):
            if self.arc_instance[start] != -1:
                continue
            comp = len(self.instance_arcs)
            stack = [start]
            members = []
            self.arc_instance[start] = comp
            while stack:
                cur = stack.pop()
                members.append(cur)
                for point in self.arc_points[cur]:
                    for nbr in point_arcs[point]:
                        if self.arc_instance[nbr] == -1:
                            self.arc_instance[nbr] = comp
                            stack.append(nbr)
            self.instance_arcs.append(sorted(members))

        self.point_instance: list[list[int]] = [[-1] * w for w in self.weights]
        for (e, pos), owners in point_arcs.items():
            inst = self.arc_instance[owners[0]]
            if inst != self.arc_instance[owners[1]]:
                raise AssertionError("point shared between two components")
            self.point_instance[e][pos] = inst

        self.instance_vectors: list[Vector] = []
        for comp in range(len(self.instance_arcs)):
            vec = [0] * tri.num_edges
            for e in range(tri.num_edges):
                vec[e] = sum(1 for inst in self.point_instance[e] if inst == comp)
            self.instance_vectors.append(tuple(vec))
        if self.instance_vectors:
            if add_vectors(self.instance_vectors) != self.weights:
                raise AssertionError("component vectors do not sum to the input")

    def _arc_endpoints(self, arc: tuple[int, int, int]):
        t, j, d = arc
        e1, s1 = self.tri.triangles[t][(j + 2) % 3]
        e2, s2 = self.tri.triangles[t][j]
        p1 = self.weights[e1] - 1 - d
        p2 = d
        c1 = p1 if s1 == 0 else self.weights[e1] - 1 - p1
        c2 = p2 if s2 == 0 else self.weights[e2] - 1 - p2
        return (e1, c1), (e2, c2)


def trace(tri: Triangulation, weights: Vector) -> tuple[tuple[Vector, int], ...]:
    """Connected components of the normal multicurve, with multiplicities."""
    drawing = Drawing(tri, weights)
    tally: dict[Vector, int] = {}
    for vec in drawing.instance_vectors:
        tally[vec] = tally.get(vec, 0) + 1
    return tuple(sorted(tally.items()))


def is_peripheral(tri: Triangulation, component: Vector) -> bool:
    """True iff the component is the link of a vertex: boundary-parallel on a
    punctured model, null-homotopic on a closed one.  Normal components of
    positive weight are otherwise essential."""
    return tuple(component) in tri.link_vectors


def disjoint(tri: Triangulation, alpha: Sequence[Vector], beta: Sequence[Vector]) -> bool:
    """Zero-geometric-intersection test via uniqueness of normal form: the two
    multicurves are disjoint iff the traced sum is exactly the multiset union
    of their components."""
    expected: dict[Vector, int] = {}
    for comp in list(alpha) + list(beta):
        comp = tuple(comp)
        expected[comp] = expected.get(comp, 0) + 1
    total = add_vectors(list(alpha) + list(beta))
    return trace(tri, total) == tuple(sorted(expected.items()))


def disjoint_curves(tri: Triangulation, a: Vector, b: Vector) -> bool:
    return disjoint(tri, (a,), (b,))


def enumerate_curves(tri: Triangulation, max_weight: int) -> tuple[Vector, ...]:
    """All single-component non-peripheral normal vectors with every weight at
    most max_weight, in lexicographic order.

    Backtracks edge by edge, checking each triangle as soon as its last edge
    weight is fixed and pruning slots whose completions cannot satisfy the
    triangle inequalities within the weight cap.
    """
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    E = tri.num_edges

    # Assign edges in an order that finishes triangles early.
    order: list[int] = []
    placed = [False] * E
    for corners in tri.triangles:
        for e, _ in corners:
            if not placed[e]:
                placed[e] = True
                order.append(e)
    position = {e: idx for idx, e in enumerate(order)}

    full_checks: list[list[tuple[int, ...]]] = [[] for _ in range(E)]
    pair_checks: list[list[tuple[int, int]]] = [[] for _ in range(E)]
    for corners in tri.triangles:
        edges = tuple(e for e, _ in corners)
        ranked = sorted(edges, key=lambda e: position[e])
        full_checks[ranked[2]].append(edges)
        pair_checks[ranked[1]].append((ranked[0], ranked[1]))

    weights = [0] * E
    found: list[Vector] = []

    def assign(idx: int) -> None:
        if idx == E:
            vec = tuple(weights)
            if sum(vec) == 0:
                return
            components = trace(tri, vec)
            if len(components) == 1 and components[0][1] == 1:
                if not is_peripheral(tri, components[0][0]):
                    found.append(vec)
            return
        e = order[idx]
        for w in range(max_weight + 1):
            weights[e] = w
            ok = True
            for a, b in pair_checks[e]:
                if abs(weights[a] - weights[b]) > max_weight:
                    ok = False
                    break
            if ok:
                for edges in full_checks[e]:
                    w0, w1, w2 = (weights[x] for x in edges)
                    if (w0 + w1 + w2) % 2 or w0 > w1 + w2 or w1 > w0 + w2 or w2 > w0 + w1:
                        ok = False
                        break
            if ok:
                assign(idx + 1)
        weights[e] = 0

    assign(0)
    return tuple(sorted(found))


Region = tuple  # ('c', t, corner, rank) or ('C', t)


class CutResult:
    """Complementary pieces of the cut components inside one drawing.

    Cuts the surface along the arcs of the chosen component instances only;
    remaining instances ride along as passengers and report which piece they
    lie in.  Pieces carry compact signatures: the Euler count runs over the
    polygonal cell structure induced by the cut, and the boundary circles are
    the cut sides plus any punctures inside the piece.
    """

    def __init__(self, drawing: Drawing, cut_ids: frozenset[int]):
        self.drawing = drawing
        self.tri = drawing.tri
        self.cut_ids = cut_ids

        tri = self.tri
        self.cut_depths: list[list[list[int]]] = [
            [[] for _ in range(3)] for _ in range(tri.num_triangles)
        ]
        for arc_id, (t, j, d) in enumerate(drawing.arcs):
            if drawing.arc_instance[arc_id] in cut_ids:
                self.cut_depths[t][j].append(d)
        for rows in self.cut_depths:
            for row in rows:
                row.sort()

        self.cut_positions: list[list[int]] = [
            [
                pos
                for pos, inst in enumerate(drawing.point_instance[e])
                if inst in cut_ids
            ]
            for e in range(tri.num_edges)
        ]

        self._parent: dict[Region, Region] = {}
        self._interval_region: dict[tuple[int, int], Region] = {}
        for e in range(tri.num_edges):
            n = len(self.cut_positions[e])
            (t0, a0), (t1, a1) = tri.edge_sides[e]
            for r in range(n + 1):
                r0 = self._slot_interval_region(t0, a0, r)
                r1 = self._slot_interval_region(t1, a1, n - r)
                self._union(r0, r1)
                self._interval_region[(e, r)] = r0

        self._build_pieces()

    # Union-find over regions.
    def _find(self, region: Region) -> Region:
        parent = self._parent
        root = region
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[region] != root:
            parent[region], region = root, parent[region]
        return root

    def _union(self, a: Region, b: Region) -> None:
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self._parent[rb] = ra

    def _slot_interval_region(self, t: int, a: int, i: int) -> Region:
        na = len(self.cut_depths[t][a])
        nb = len(self.cut_depths[t][(a + 1) % 3])
        if i < na:
            return ("c", t, a, i)
        if i > na:
            return ("c", t, (a + 1) % 3, na + nb - i)
        return ("C", t)

    def _arc_side_regions(self, t: int, j: int, d: int) -> tuple[Region, Region]:
        """Regions on the vertex side and far side of a cut arc."""
        depths = self.cut_depths[t][j]
        r = bisect_left(depths, d)
        toward: Region = ("c", t, j, r)
        away: Region = ("c", t, j, r + 1) if r + 1 < len(depths) else ("C", t)
        return toward, away

    def _passenger_region(self, t: int, j: int, d: int) -> Region:
        depths = self.cut_depths[t][j]
        r = bisect_left(depths, d)
        return ("c", t, j, r) if r < len(depths) else ("C", t)

    def _corner_region(self, t: int, j: int) -> Region:
        return ("c", t, j, 0) if self.cut_depths[t][j] else ("C", t)

    def _build_pieces(self) -> None:
        drawing, tri = self.drawing, self.tri

        counters: list[dict[str, int]] = []
        class_ids: dict[Region, int] = {}

        def class_of(region: Region) -> int:
            root = self._find(region)
            if root not in class_ids:
                class_ids[root] = len(counters)
                counters.append(
                    {
                        "regions": 0,
                        "intervals": 0,
                        "arc_sides": 0,
                        "point_sides": 0,
                        "vertices": 0,
                        "circles": 0,
                    }
                )
            return class_ids[root]

        # Faces.
        for t in range(tri.num_triangles):
            counters[class_of(("C", t))]["regions"] += 1
            for j in range(3):
                for r in range(len(self.cut_depths[t][j])):
                    counters[class_of(("c", t, j, r))]["regions"] += 1

        # Interior 1-cells: intervals between consecutive cut points.
        self._interval_class: dict[tuple[int, int], int] = {}
        for key, region in self._interval_region.items():
            idx = class_of(region)
            counters[idx]["intervals"] += 1
            self._interval_class[key] = idx

        # Boundary 1-cells: the two sides of each cut arc.  Passenger arcs
        # just record which piece their component lies in.
        self._instance_class: dict[int, int] = {}
        for arc_id, (t, j, d) in enumerate(drawing.arcs):
            inst = drawing.arc_instance[arc_id]
            if inst in self.cut_ids:
                toward, away = self._arc_side_regions(t, j, d)
                counters[class_of(toward)]["arc_sides"] += 1
                counters[class_of(away)]["arc_sides"] += 1
            else:
                idx = class_of(self._passenger_region(t, j, d))
                if self._instance_class.setdefault(inst, idx) != idx:
                    raise AssertionError("passenger component straddles a cut")

        # Boundary 0-cells: the two sides of each cut point.
        for e in range(tri.num_edges):
            for rank in range(len(self.cut_positions[e])):
                counters[self._interval_class[(e, rank)]]["point_sides"] += 1
                counters[self._interval_class[(e, rank + 1)]]["point_sides"] += 1

        # Vertices of the triangulation.
        self._vertex_class: list[int] = []
        for orbit in tri.vertex_orbits:
            classes = {class_of(self._corner_region(t, j)) for t, j in orbit}
            if len(classes) != 1:
                raise AssertionError("vertex corners landed in different pieces")
            idx = classes.pop()
            counters[idx]["vertices"] += 1
            self._vertex_class.append(idx)

        # Cut boundary circles: walk the 2-regular multigraph whose nodes are
        # the sides of cut points and whose edges are the sides of cut arcs.
        def node(e: int, slot_side: int, pos_slot: int, below_slot: bool):
            w = drawing.weights[e]
            pos = pos_slot if slot_side == 0 else w - 1 - pos_slot
            below = below_slot if slot_side == 0 else not below_slot
            return (e, pos, 0 if below else 1)

        side_edges: list[tuple[tuple, tuple, int]] = []
        incidence: dict[tuple, list[int]] = {}
        for arc_id, (t, j, d) in enumerate(drawing.arcs):
            inst = drawing.arc_instance[arc_id]
            if inst not in self.cut_ids:
                continue
            e1, s1 = tri.triangles[t][(j + 2) % 3]
            e2, s2 = tri.triangles[t][j]
            p1 = drawing.weights[e1] - 1 - d
            p2 = d
            # Vertex side: below on slot j, above on slot j-1; far side flips.
            for below2, below1 in ((True, False), (False, True)):
                na = node(e2, s2, p2, below2)
                nb = node(e1, s1, p1, below1)
                idx = len(side_edges)
                side_edges.append((na, nb, inst))
                incidence.setdefault(na, []).append(idx)
                incidence.setdefault(nb, []).append(idx)
        for nd, inc in incidence.items():
            if len(inc) != 2:
                raise AssertionError(f"boundary node {nd} has degree {len(inc)}")

        self._boundary_instances: list[set[int]] = [set() for _ in counters]
        visited: set[int] = set()
        for start_edge in range(len(side_edges)):
            if start_edge in visited:
                continue
            instances: set[int] = set()
            cur_edge = start_edge
            cur_node = side_edges[start_edge][0]
            while cur_edge not in visited:
                visited.add(cur_edge)
                na, nb, inst = side_edges[cur_edge]
                instances.add(inst)
                cur_node = nb if cur_node == na else na
                inc = incidence[cur_node]
                cur_edge = inc[1] if inc[0] == cur_edge else inc[0]
            e, pos, flag = side_edges[start_edge][0]
            rank = bisect_left(self.cut_positions[e], pos)
            idx = self._interval_class[(e, rank if flag == 0 else rank + 1)]
            counters[idx]["circles"] += 1
            self._boundary_instances[idx].update(instances)

        # Assemble compact signatures.  The cell count gives the Euler
        # characteristic of the piece with its punctures filled in; on a
        # punctured model each puncture is really a boundary circle.
        punctured = tri.sig.b >= 1
        class_marker = {
            idx: min(key for key, k in self._interval_class.items() if k == idx)
            for idx in range(len(counters))
        }
        order = sorted(range(len(counters)), key=lambda idx: class_marker[idx])
        self._piece_of_class = {cls: rank for rank, cls in enumerate(order)}
        self.pieces: list[SurfaceSig] = []
        self.piece_punctures: list[tuple[int, ...]] = []
        self.piece_boundary_instances: list[frozenset[int]] = []
        self.markers: list[tuple[int, int]] = []
        for cls in order:
            c = counters[cls]
            chi_cell = (
                c["vertices"]
                + c["point_sides"]
                - c["intervals"]
                - c["arc_sides"]
                + c["regions"]
            )
            chi = chi_cell - c["vertices"] if punctured else chi_cell
            nb = c["circles"] + (c["vertices"] if punctured else 0)
            if (2 - chi - nb) % 2:
                raise AssertionError("piece genus came out fractional")
            genus = (2 - chi - nb) // 2
            if genus < 0:
                raise AssertionError("piece genus came out negative")
            self.pieces.append(SurfaceSig(genus, nb))
            self.piece_punctures.append(
                tuple(v for v, k in enumerate(self._vertex_class) if k == cls)
            )
            self.piece_boundary_instances.append(frozenset(self._boundary_instances[cls]))
            self.markers.append(class_marker[cls])

        if sum(p.euler for p in self.pieces) != tri.sig.euler:
            raise AssertionError("piece Euler characteristics do not sum to the surface")

    def piece_of_interval(self, e: int, rank: int) -> int:
        return self._piece_of_class[self._interval_class[(e, rank)]]

    def piece_of_instance(self, instance: int) -> int:
        return self._piece_of_class[self._instance_class[instance]]


class ComplementPieces:
    """Public cut interface: pieces of the complement of a multicurve.

    `components` must be distinct pairwise disjoint curve classes.  `locate`
    places any further curve that is disjoint from the multicurve, and
    `meets_piece` answers whether a curve essentially intersects one piece.
    """

    def __init__(self, tri: Triangulation, components: Sequence[Vector]):
        self.tri = tri
        comps = canonical_multicurve(components)
        if len(set(comps)) != len(comps):
            raise ValueError("cut multicurve needs distinct component classes")
        self.components = comps
        total = add_vectors(comps) if comps else tuple([0] * tri.num_edges)
        self._drawing = Drawing(tri, total)
        traced = canonical_multicurve(self._drawing.instance_vectors)
        if traced != comps:
            raise ValueError("components are not pairwise disjoint curve classes")
        self._cut = CutResult(self._drawing, frozenset(range(len(comps))))
        self.pieces = tuple(self._cut.pieces)

    def boundary_classes(self, idx: int) -> tuple[Vector, ...]:
        """Component vectors of the cut curves bounding one piece."""
        insts = self._cut.piece_boundary_instances[idx]
        return tuple(sorted(self._drawing.instance_vectors[i] for i in insts))

    def punctures(self, idx: int) -> tuple[int, ...]:
        return self._cut.piece_punctures[idx]

    def complexities(self) -> tuple[int, ...]:
        return tuple(p.complexity for p in self.pieces)

    def _marker_among(self, idx: int, keep_vectors: frozenset[Vector]) -> tuple[int, int]:
        """Marker of piece idx re-ranked against a sub-multicurve of the cut.

        The relative order of the kept components' points along an edge agrees
        between this drawing and any drawing containing the kept components,
        because deleting strands is a monotone normal isotopy on each edge.
        """
        e, rank = self._cut.markers[idx]
        kept = 0
        for pos in self._cut.cut_positions[e][:rank]:
            inst = self._drawing.point_instance[e][pos]
            if self._drawing.instance_vectors[inst] in keep_vectors:
                kept += 1
        return e, kept

    def _locate_against(
        self, cut_vectors: tuple[Vector, ...], curve: Vector
    ) -> tuple["CutResult", int]:
        """Cut along a sub-multicurve with `curve` riding as the passenger."""
        union = Drawing(self.tri, add_vectors(list(cut_vectors) + [curve]))
        expected = canonical_multicurve(list(cut_vectors) + [curve])
        if canonical_multicurve(union.instance_vectors) != expected:
            raise ValueError("curve is not disjoint from the cut multicurve")
        passenger = -1
        cut_ids = set(range(len(union.instance_vectors)))
        for i, vec in enumerate(union.instance_vectors):
            if vec == curve:
                passenger = i
        cut_ids.discard(passenger)
        sub = CutResult(union, frozenset(cut_ids))
        return sub, passenger

    def locate(self, curve: Vector) -> int:
        """Index of the piece containing a curve disjoint from the multicurve.

        Raises ValueError when the curve crosses the multicurve or is parallel
        to one of its components (a parallel curve lies on the cut locus, not
        inside a piece).
        """
        curve = tuple(curve)
        if curve in self.components:
            raise ValueError("curve is parallel to a cut component")
        sub, passenger = self._locate_against(self.components, curve)
        target = sub._instance_class[passenger]
        for idx in range(len(self.pieces)):
            e, rank = self._cut.markers[idx]
            if sub._interval_class[(e, rank)] == target:
                return idx
        raise AssertionError("passenger piece did not match any marker")

    def meets_piece(self, idx: int, curve: Vector) -> bool:
        """Does every representative of the curve intersect piece idx?

        A curve misses the piece iff it can be isotoped off it: either it is
        parallel to a boundary curve of the piece, or it is disjoint from the
        boundary multicurve and lies in a complementary piece of that boundary
        other than this one.  Crossing the boundary forces intersection.
        """
        curve = tuple(curve)
        boundary = tuple(sorted(set(self.boundary_classes(idx))))
        if curve in boundary:
            return False
        if not boundary:
            return True  # the piece is the whole surface
        if not disjoint(self.tri, boundary, (curve,)):
            return True
        sub, passenger = self._locate_against(boundary, curve)
        e, kept_rank = self._marker_among(idx, frozenset(boundary))
        return sub._instance_class[passenger] == sub._interval_class[(e, kept_rank)]


def cut_pieces(tri: Triangulation, components: Sequence[Vector]) -> ComplementPieces:
    """Complementary pieces of a multicurve of distinct curve classes."""
    return ComplementPieces(tri, components)


def multicurve_to_json(components: Sequence[Vector]) -> dict:
    tally: dict[Vector, int] = {}
    for comp in components:
        comp = tuple(comp)
        tally[comp] = tally.get(comp, 0) + 1
    return {
        "components": [
            {"weights": list(vec), "mult": mult} for vec, mult in sorted(tally.items())
        ]
    }


def multicurve_from_json(obj: dict) -> Multicurve:
    components: list[Vector] = []
    for entry in obj["components"]:
        vec = tuple(int(w) for w in entry["weights"])
        components.extend([vec] * int(entry.get("mult", 1)))
    return canonical_multicurve(components)
