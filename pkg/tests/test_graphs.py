import itertools

import pytest

from multicurves.curves import cut_pieces, disjoint_curves
from multicurves.graphs import (
    IncompleteInventory,
    bfs_distance,
    bfs_path,
    build_graph,
    differing_support_complexity,
    extend_to_pants,
    extensions_adjacent,
    is_edge_interpolating,
    is_edge_multicurve,
    lift_path,
    multicurve_vertices,
    replacement_path,
    run_qi_suite,
    upper_bound_certificate,
    witness_report,
)
from multicurves.surfaces import SurfaceSig

from helpers import inventory, tri


def m1_graph(g, b, w):
    return build_graph(tri(g, b), "multicurve", 1, w)


def i1_graph(g, b, w):
    return build_graph(tri(g, b), "interpolating", 1, w)


def test_multicurve_edge_predicate():
    t = tri(0, 5)
    curves = inventory(0, 5, 2)
    a, b = next(
        (x, y)
        for i, x in enumerate(curves)
        for y in curves[i + 1 :]
        if disjoint_curves(t, x, y)
    )
    assert is_edge_multicurve(t, 1, (a,), (b,))
    assert not is_edge_multicurve(t, 1, (a,), (a,))
    crossing = next(c for c in curves if not disjoint_curves(t, a, c) and c != a)
    assert not is_edge_multicurve(t, 1, (a,), (crossing,))


def test_multicurve_edge_needs_shared_part():
    t = tri(0, 5)
    g = build_graph(t, "multicurve", 1, 2)
    # k = 2 equals the complexity here: the builder and predicate refuse it.
    with pytest.raises(ValueError):
        is_edge_multicurve(t, 2, g.vertices[0] * 2, g.vertices[1] * 2)
    with pytest.raises(ValueError):
        build_graph(t, "multicurve", 2, 2)


def test_edge_predicates_irreflexive_symmetric():
    t = tri(0, 5)
    g = m1_graph(0, 5, 2)
    for i, j in itertools.islice(g.edges(), 30):
        a, b = g.vertices[i], g.vertices[j]
        assert is_edge_multicurve(t, 1, a, b)
        assert is_edge_multicurve(t, 1, b, a)
    gi = i1_graph(0, 5, 2)
    for i, j in itertools.islice(gi.edges(), 30):
        a, b = gi.vertices[i], gi.vertices[j]
        assert is_edge_interpolating(t, 1, a, b)
        assert is_edge_interpolating(t, 1, b, a)
        assert not is_edge_interpolating(t, 1, a, a)


def test_interpolating_edge_examples():
    t = tri(0, 5)
    gi = i1_graph(0, 5, 2)
    shared_one = crossing_pair = None
    for i, j in itertools.combinations(range(len(gi.vertices)), 2):
        a, b = gi.vertices[i], gi.vertices[j]
        common = set(a) & set(b)
        if len(common) == 1 and shared_one is None:
            shared_one = (a, b)
        if not common and crossing_pair is None:
            crossing_pair = (a, b)
        if shared_one and crossing_pair:
            break
    assert shared_one is not None and crossing_pair is not None
    assert is_edge_interpolating(t, 1, *shared_one)
    assert not is_edge_interpolating(t, 1, *crossing_pair)


def test_differing_support_matches_complexity_count():
    t = tri(0, 5)
    gi = i1_graph(0, 5, 2)
    xi0 = t.sig.complexity
    seen = set()
    for i, j in itertools.combinations(range(min(len(gi.vertices), 25)), 2):
        shared = tuple(sorted(set(gi.vertices[i]) & set(gi.vertices[j])))
        if shared in seen:
            continue
        seen.add(shared)
        assert differing_support_complexity(t, shared) == xi0 - len(shared)


def test_graph_shapes():
    g = m1_graph(0, 5, 2)
    assert g.edge_count() > 0
    gi = i1_graph(0, 5, 2)
    assert all(len(adj) >= 1 for adj in gi.adjacency)
    g12 = m1_graph(1, 2, 2)
    assert g12.edge_count() > 0


def test_pants_vertices_cover_all_disjoint_pairs():
    t = tri(0, 5)
    curves = inventory(0, 5, 2)
    expected = sum(
        1
        for i, a in enumerate(curves)
        for b in curves[i + 1 :]
        if disjoint_curves(t, a, b)
    )
    assert len(multicurve_vertices(t, 2, curves)) == expected


def test_extend_to_pants():
    t = tri(0, 5)
    curves = inventory(0, 5, 2)
    gi = i1_graph(0, 5, 2)
    pants = gi.vertices[0]
    assert extend_to_pants(t, pants, curves) == pants
    alpha = (pants[0],)
    ext = extend_to_pants(t, alpha, curves)
    assert set(alpha) <= set(ext) and len(ext) == 2
    assert ext == extend_to_pants(t, alpha, curves)  # deterministic
    with pytest.raises(IncompleteInventory):
        extend_to_pants(t, alpha, [alpha[0]])


def test_extensions_adjacent_exhaustive_small():
    t = tri(0, 5)
    curves = inventory(0, 5, 2)
    gi = i1_graph(0, 5, 2)
    for alpha in multicurve_vertices(t, 1, curves)[:10]:
        completions = [p for p in gi.vertices if set(alpha) <= set(p)]
        for e1, e2 in itertools.combinations(completions, 2):
            assert extensions_adjacent(t, 1, alpha, e1, e2)
    with pytest.raises(ValueError):
        extensions_adjacent(t, 1, (curves[0],), gi.vertices[0], gi.vertices[1])


def test_upper_bound_certificates():
    t = tri(0, 5)
    curves = inventory(0, 5, 2)
    g = m1_graph(0, 5, 2)
    for i, j in itertools.islice(g.edges(), 25):
        path = upper_bound_certificate(t, 1, g.vertices[i], g.vertices[j], curves)
        assert 1 <= len(path) <= 3
    with pytest.raises(ValueError):
        upper_bound_certificate(t, 1, g.vertices[0], g.vertices[0], curves)


def test_replacement_path_bounds():
    t = tri(0, 5)
    gi = i1_graph(0, 5, 2)
    pants = gi.vertices[0]
    a, b = (pants[0],), (pants[1],)
    path = replacement_path(t, 1, pants, a, b)
    assert len(path) == 2
    assert replacement_path(t, 1, pants, a, a) == (a,)


def test_lift_path_unit_steps():
    t = tri(0, 5)
    gi = i1_graph(0, 5, 2)
    start, goal = 0, len(gi.vertices) // 2
    hops = bfs_path(gi, start, goal)
    assert hops is not None
    path = [gi.vertices[i] for i in hops]
    alpha = (path[0][0],)
    beta = (path[-1][0],)
    lift = lift_path(t, 1, path, alpha=alpha, beta=beta)
    n = len(path) - 1
    assert lift.constant == 1
    assert all(step <= 1 for step in lift.step_lengths)
    assert lift.total_length <= (n + 1) * lift.constant
    # Degenerate path: no lifts, a single in-pants walk.
    tiny = lift_path(t, 1, [path[0]], alpha=(path[0][0],), beta=(path[0][1],))
    assert tiny.lifts == ()
    assert tiny.total_length <= 1


def test_bfs_distance():
    g = m1_graph(0, 5, 2)
    assert bfs_distance(g, 0, 0) == 0
    i, j = next(iter(g.edges()))
    assert bfs_distance(g, i, j) == 1
    with pytest.raises(ValueError):
        bfs_distance(g, 0, len(g.vertices))


def test_witness_reports_on_sphere():
    t = tri(0, 5)
    curves = inventory(0, 5, 2)
    vertices = multicurve_vertices(t, 2, curves)
    curve = next(
        c
        for c in curves
        if sorted(p.b for p in cut_pieces(t, [c]).pieces) == [3, 4]
    )
    pieces = cut_pieces(t, [curve])
    big = max(range(2), key=lambda i: pieces.pieces[i].complexity)
    small = 1 - big

    report_big = witness_report(t, 2, pieces, big, vertices)
    assert report_big.threshold == 1
    assert report_big.threshold_verdict
    assert report_big.inventory_verdict
    assert report_big.avoiding_vertex is None

    report_small = witness_report(t, 2, pieces, small, vertices)
    assert not report_small.threshold_verdict
    assert not report_small.inventory_verdict
    avoiding = report_small.avoiding_vertex
    assert avoiding is not None
    assert all(not pieces.meets_piece(small, c) for c in avoiding)


def test_witness_threshold_for_single_curves():
    # For k = 1 only the whole surface reaches the threshold, so every proper
    # piece admits an avoiding vertex once the inventory is rich enough.
    t = tri(0, 5)
    curves = inventory(0, 5, 2)
    vertices = multicurve_vertices(t, 1, curves)
    curve = curves[0]
    pieces = cut_pieces(t, [curve])
    for idx in range(len(pieces.pieces)):
        report = witness_report(t, 1, pieces, idx, vertices)
        assert not report.threshold_verdict
        assert not report.inventory_verdict


def test_qi_suite_deterministic():
    r1 = run_qi_suite(SurfaceSig(0, 5), 1, 2, samples=15, seed=11)
    r2 = run_qi_suite(SurfaceSig(0, 5), 1, 2, samples=15, seed=11)
    assert r1.lines() == r2.lines()
    assert r1.passed
