"""Canonical combinatorial triangulations of surfaces.

Boundary components are modeled as punctures sitting at the vertices of an
ideal triangulation; isotopy classes of essential curves agree between the
compact and punctured pictures.  A closed surface uses a one-vertex
triangulation of the same combinatorial shape as its once-punctured cousin.

A triangulation is a list of triangles, each a corner-ordered triple of
(edge id, side) references.  Every edge has exactly two sides.  The two sides
traverse the edge in opposite directions, so a position p along side 0 equals
position (w - 1 - p) along side 1 whenever w objects sit on the edge; this is
the orientation convention the curve-tracing engine relies on.

Slot j of a triangle runs from triangle vertex j to vertex j + 1 (mod 3), so
corner j (at vertex j) touches slots j - 1 and j.
"""

from __future__ import annotations

from .surfaces import SurfaceSig, is_graph_admissible


class Triangulation:
    """Immutable triangulated model of one surface.

    Derived data (edge incidences, vertex orbits, peripheral link vectors) is
    computed once at construction; all consumers treat instances as frozen.
    """

    def __init__(self, sig: SurfaceSig, triangles):
        self.sig = sig
        self.triangles = tuple(
            tuple((int(e), int(s)) for e, s in corners) for corners in triangles
        )
        count = len(self.triangles)
        if count == 0 or count % 2:
            raise ValueError(f"need a positive even triangle count, got {count}")
        self.num_triangles = count
        self.num_edges = 3 * count // 2

        self.edge_sides: list[list[tuple[int, int] | None]] = [
            [None, None] for _ in range(self.num_edges)
        ]
        for t, corners in enumerate(self.triangles):
            if len({e for e, _ in corners}) != 3:
                # The tracing engine needs the three slot edges distinct; all
                # canonical constructions satisfy this.
                raise ValueError(f"triangle {t} repeats an edge")
            for slot, (e, s) in enumerate(corners):
                if not 0 <= e < self.num_edges or s not in (0, 1):
                    raise ValueError(f"bad edge reference ({e},{s}) in triangle {t}")
                if self.edge_sides[e][s] is not None:
                    raise ValueError(f"side {s} of edge {e} referenced twice")
                self.edge_sides[e][s] = (t, slot)
        for e, sides in enumerate(self.edge_sides):
            if None in sides:
                raise ValueError(f"edge {e} is missing a side")

        self.vertex_orbits = self._compute_vertex_orbits()
        expected_vertices = sig.b if sig.b >= 1 else 1
        if len(self.vertex_orbits) != expected_vertices:
            raise ValueError(
                f"triangulation has {len(self.vertex_orbits)} vertices, "
                f"expected {expected_vertices} for {sig}"
            )
        chi_closed = len(self.vertex_orbits) - self.num_edges + self.num_triangles
        if chi_closed != 2 - 2 * sig.g:
            raise ValueError(f"closed Euler characteristic {chi_closed} != {2 - 2 * sig.g}")

        self.link_vectors = tuple(self._link_vector(orbit) for orbit in self.vertex_orbits)

    def opposite(self, e: int, s: int) -> tuple[int, int]:
        """(triangle, slot) carrying the other side of edge e."""
        place = self.edge_sides[e][1 - s]
        assert place is not None
        return place

    def _rotate_corner(self, t: int, j: int) -> tuple[int, int]:
        # Cross the outgoing slot j; the shared vertex is the far end there.
        e, s = self.triangles[t][j]
        t2, j2 = self.opposite(e, s)
        return (t2, (j2 + 1) % 3)

    def _compute_vertex_orbits(self):
        orbits = []
        seen: set[tuple[int, int]] = set()
        for t in range(self.num_triangles):
            for j in range(3):
                if (t, j) in seen:
                    continue
                orbit = [(t, j)]
                seen.add((t, j))
                cur = self._rotate_corner(t, j)
                while cur != (t, j):
                    orbit.append(cur)
                    seen.add(cur)
                    cur = self._rotate_corner(*cur)
                orbits.append(tuple(orbit))
        return tuple(orbits)

    def _link_vector(self, orbit) -> tuple[int, ...]:
        # The link crosses an edge once per edge end at the vertex; each end
        # is flanked by two corners of the orbit, so halve the tally.
        w = [0] * self.num_edges
        for t, j in orbit:
            w[self.triangles[t][(j + 2) % 3][0]] += 1
            w[self.triangles[t][j][0]] += 1
        assert all(x % 2 == 0 for x in w)
        return tuple(x // 2 for x in w)

    def __repr__(self):
        return f"Triangulation({self.sig}, {self.num_triangles} triangles)"

    def to_json(self) -> dict:
        return {
            "surface": {"g": self.sig.g, "b": self.sig.b},
            "triangles": [
                [{"edge": e, "side": s} for e, s in corners] for corners in self.triangles
            ],
        }

    @classmethod
    def from_json(cls, obj: dict, sig: SurfaceSig | None = None) -> "Triangulation":
        if sig is None:
            surf = obj["surface"]
            sig = SurfaceSig(int(surf["g"]), int(surf["b"]))
        triangles = [
            [(corner["edge"], corner["side"]) for corner in corners]
            for corners in obj["triangles"]
        ]
        return cls(sig, triangles)


def _from_directed_faces(sig: SurfaceSig, faces) -> Triangulation:
    """Build a triangulation from faces given as consistently oriented vertex
    triples; every undirected vertex pair must occur in both directions."""
    edge_ids: dict[tuple[int, int], int] = {}
    first_dir: dict[tuple[int, int], tuple[int, int]] = {}
    triangles = []
    for face in faces:
        corners = []
        for idx in range(3):
            u, v = face[idx], face[(idx + 1) % 3]
            key = (min(u, v), max(u, v))
            if key not in edge_ids:
                edge_ids[key] = len(edge_ids)
                first_dir[key] = (u, v)
                side = 0
            else:
                if first_dir[key] != (v, u):
                    raise ValueError(f"faces traverse edge {key} twice in the same direction")
                side = 1
            corners.append((edge_ids[key], side))
        triangles.append(tuple(corners))
    return Triangulation(sig, triangles)


def _tetrahedron() -> Triangulation:
    """The four-punctured sphere as the boundary of a tetrahedron."""
    return _from_directed_faces(
        SurfaceSig(0, 4), [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
    )


def _polygon_fan(g: int, b: int) -> Triangulation:
    """Genus-g surface from the standard 4g-gon, fan-triangulated.

    The polygon boundary word is the usual commutator pattern, so all polygon
    vertices are identified to a single vertex.  With b = 1 that vertex is the
    puncture; with b = 0 it is a material point of the closed surface.
    """
    if g < 1:
        raise ValueError("polygon scheme needs genus >= 1")
    n = 4 * g

    def boundary(pos: int) -> tuple[int, int]:
        block, r = divmod(pos, 4)
        pair = 2 * block + (r % 2)
        return (pair, 0 if r < 2 else 1)

    triangles = []
    for i in range(1, n - 1):
        slot0 = boundary(0) if i == 1 else (2 * g + i - 2, 0)
        slot1 = boundary(i)
        slot2 = boundary(n - 1) if i == n - 2 else (2 * g + i - 1, 1)
        triangles.append((slot0, slot1, slot2))
    return Triangulation(SurfaceSig(g, b), triangles)


def subdivide(tri: Triangulation, t_idx: int = 0) -> Triangulation:
    """Insert a new puncture inside one triangle (the 1-to-3 move)."""
    e0s0, e1s1, e2s2 = tri.triangles[t_idx]
    f0, f1, f2 = tri.num_edges, tri.num_edges + 1, tri.num_edges + 2
    new_triangles = list(tri.triangles)
    new_triangles[t_idx] = (e0s0, (f1, 0), (f0, 1))
    new_triangles.append((e1s1, (f2, 0), (f1, 1)))
    new_triangles.append((e2s2, (f0, 0), (f2, 1)))
    new_sig = SurfaceSig(tri.sig.g, tri.sig.b + 1)
    return Triangulation(new_sig, new_triangles)


def triangulate(sig: SurfaceSig) -> Triangulation:
    """Deterministic canonical triangulation for each supported signature.

    Spheres get the tetrahedron plus repeated subdivision of triangle 0;
    positive genus gets the fan-triangulated polygon plus subdivisions.
    Stable across runs: the construction is pure arithmetic.
    """
    if not is_graph_admissible(sig):
        raise ValueError(f"{sig} carries no multicurve graphs (complexity < 1)")
    if sig.g == 0:
        tri = _tetrahedron()
        for _ in range(sig.b - 4):
            tri = subdivide(tri, 0)
    else:
        tri = _polygon_fan(sig.g, min(sig.b, 1))
        for _ in range(max(sig.b - 1, 0)):
            tri = subdivide(tri, 0)
    if tri.sig != sig:
        raise AssertionError(f"built {tri.sig}, wanted {sig}")
    return tri
