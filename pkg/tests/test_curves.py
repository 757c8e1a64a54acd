import random

import pytest

from multicurves.curves import (
    add_vectors,
    cut_pieces,
    disjoint,
    disjoint_curves,
    enumerate_curves,
    is_admissible,
    is_peripheral,
    multicurve_from_json,
    multicurve_to_json,
    trace,
)
from multicurves.decompositions import gluing_feasible
from multicurves.surfaces import SurfaceSig

from helpers import inventory, sphere_oracle, torus_oracle, tri


def test_admissibility_examples():
    t = tri(1, 1)
    assert is_admissible(t, (1, 1, 0))
    assert not is_admissible(t, (1, 0, 0))
    assert is_admissible(t, (0, 0, 0))
    with pytest.raises(ValueError):
        is_admissible(t, (1, 1))


def _random_admissible(t, rng, bound=6):
    while True:
        v = tuple(rng.randint(0, bound) for _ in range(t.num_edges))
        if is_admissible(t, v):
            return v


@pytest.mark.parametrize("g,b", [(1, 1), (0, 4)])
def test_admissibility_closed_under_addition(g, b):
    t = tri(g, b)
    rng = random.Random(20240 + g * 10 + b)
    for _ in range(1000):
        u = _random_admissible(t, rng)
        v = _random_admissible(t, rng)
        assert is_admissible(t, add_vectors([u, v]))


def test_trace_examples():
    t = tri(1, 1)
    assert trace(t, (0, 0, 0)) == ()
    assert trace(t, (2, 2, 0)) == (((1, 1, 0), 2),)
    resolved = trace(t, (2, 1, 1))
    assert len(resolved) == 1 and resolved[0][1] == 1


def test_trace_multiples():
    for g, b in [(1, 1), (0, 4)]:
        t = tri(g, b)
        for curve in inventory(g, b, 2)[:6]:
            for n in range(1, 5):
                scaled = tuple(n * w for w in curve)
                assert trace(t, scaled) == ((curve, n),)


def test_peripheral_detection():
    t11 = tri(1, 1)
    assert is_peripheral(t11, t11.link_vectors[0])
    assert not is_peripheral(t11, (1, 1, 0))
    t04 = tri(0, 4)
    for link in t04.link_vectors:
        assert is_peripheral(t04, link)
    t20 = tri(2, 0)
    assert is_peripheral(t20, t20.link_vectors[0])


def test_disjointness_basics():
    t = tri(1, 1)
    assert not disjoint_curves(t, (1, 1, 0), (1, 0, 1))
    alpha = [(1, 1, 0)]
    assert disjoint(t, alpha, alpha)  # a class is disjoint from itself


def test_disjointness_symmetric_and_monotone():
    t = tri(0, 5)
    curves = inventory(0, 5, 2)
    pairs = [
        (a, b)
        for i, a in enumerate(curves)
        for b in curves[i + 1 :]
        if disjoint_curves(t, a, b)
    ]
    assert pairs, "expected disjoint pairs in the inventory"
    for a, b in pairs[:20]:
        assert disjoint_curves(t, b, a)
        # sub-multicurve of a disjoint multicurve stays disjoint
        assert disjoint(t, [a], [a, b])


def test_farey_inventories():
    for max_weight in (1, 2, 3):
        engine = sorted(tuple(sorted(c)) for c in inventory(1, 1, max_weight))
        assert engine == torus_oracle(max_weight)
        engine04 = sorted(tuple(sorted(c)) for c in inventory(0, 4, max_weight))
        assert engine04 == sphere_oracle(max_weight)


def test_inventory_monotone_in_weight():
    for g, b in [(1, 1), (0, 4), (0, 5)]:
        for w in (1, 2):
            assert set(inventory(g, b, w)) <= set(inventory(g, b, w + 1))


def test_disjoint_puncture_pair_curves_on_sphere():
    # Two curves around disjoint puncture pairs of the five-punctured sphere.
    t = tri(0, 5)
    curves = inventory(0, 5, 2)
    found = None
    for i, a in enumerate(curves):
        for b in curves[i + 1 :]:
            if disjoint_curves(t, a, b):
                pa = cut_pieces(t, [a])
                pb = cut_pieces(t, [b])
                small_a = min(
                    (pa.punctures(i2) for i2 in range(2)), key=len
                )
                small_b = min(
                    (pb.punctures(i2) for i2 in range(2)), key=len
                )
                if len(small_a) == 2 and len(small_b) == 2 and not set(small_a) & set(small_b):
                    found = (a, b)
                    break
        if found:
            break
    assert found is not None


def test_cut_pieces_examples():
    t05 = tri(0, 5)
    curve = next(
        c
        for c in inventory(0, 5, 2)
        if sorted(p.b for p in cut_pieces(t05, [c]).pieces) == [3, 4]
    )
    pieces = cut_pieces(t05, [curve])
    assert sorted((p.g, p.b) for p in pieces.pieces) == [(0, 3), (0, 4)]

    t20 = tri(2, 0)
    nonsep = next(
        c
        for c in inventory(2, 0, 2)
        if [(p.g, p.b) for p in cut_pieces(t20, [c]).pieces] == [(1, 2)]
    )
    assert cut_pieces(t20, [nonsep]).pieces == (SurfaceSig(1, 2),)

    empty = cut_pieces(t05, [])
    assert empty.pieces == (SurfaceSig(0, 5),)


def test_cut_pieces_euler_and_complexity_additivity():
    for g, b in [(0, 5), (1, 2), (2, 0)]:
        t = tri(g, b)
        curves = inventory(g, b, 2)
        for c in curves[:15]:
            pieces = cut_pieces(t, [c])
            assert sum(p.euler for p in pieces.pieces) == t.sig.euler
            assert sum(pieces.complexities()) == t.sig.complexity - 1
            assert gluing_feasible(pieces.pieces, t.sig)


def test_cut_pieces_two_component_multicurves():
    t = tri(0, 5)
    curves = inventory(0, 5, 2)
    checked = 0
    for i, a in enumerate(curves):
        for b in curves[i + 1 :]:
            if disjoint_curves(t, a, b):
                pieces = cut_pieces(t, [a, b])
                assert sum(pieces.complexities()) == t.sig.complexity - 2
                assert gluing_feasible(pieces.pieces, t.sig)
                checked += 1
                if checked >= 10:
                    return
    assert checked


def test_locate_and_meets_piece():
    t = tri(0, 5)
    curves = inventory(0, 5, 2)
    a, b = next(
        (a, b)
        for i, a in enumerate(curves)
        for b in curves[i + 1 :]
        if disjoint_curves(t, a, b)
    )
    pieces = cut_pieces(t, [a])
    where = pieces.locate(b)
    assert pieces.pieces[where].complexity >= 1  # pants holds no curve
    assert pieces.meets_piece(where, b)
    other = 1 - where
    assert not pieces.meets_piece(other, b)
    # The cut curve itself misses both sides.
    assert not pieces.meets_piece(0, a)
    assert not pieces.meets_piece(1, a)
    with pytest.raises(ValueError):
        pieces.locate(a)


def test_locate_rejects_crossing_curves():
    t = tri(1, 1)
    pieces = cut_pieces(t, [(1, 1, 0)])
    with pytest.raises(ValueError):
        pieces.locate((1, 0, 1))


def test_multicurve_json_roundtrip():
    comps = ((1, 1, 0), (1, 1, 0), (1, 0, 1))
    obj = multicurve_to_json(comps)
    assert multicurve_from_json(obj) == tuple(sorted(comps))
