import pytest

from multicurves.decompositions import (
    GluingPattern,
    build_pattern,
    classify_exhaustive,
    disjoint_pair_certificate,
    disjoint_pair_exists,
    disjoint_pairs_are_complements,
    enumerate_decompositions,
    find_thickness_witness,
    gluing_feasible,
    max_piece_count_search,
)
from multicurves.formulas import (
    HYPERBOLIC,
    RELATIVELY_HYPERBOLIC,
    THICK,
    max_piece_count,
)
from multicurves.surfaces import SurfaceSig

S = SurfaceSig


def small_sweep(gmax=3, bmax=4, min_complexity=1):
    for g in range(gmax + 1):
        for b in range(bmax + 1):
            sig = S(g, b)
            if sig.complexity >= min_complexity:
                yield sig


def test_gluing_feasible_examples():
    assert gluing_feasible([S(1, 1), S(1, 1)], S(2, 0))
    assert not gluing_feasible([S(1, 1), S(1, 1)], S(2, 1))
    assert gluing_feasible([S(0, 4), S(0, 5)], S(0, 7))


def test_gluing_feasible_single_piece():
    assert gluing_feasible([S(2, 0)], S(2, 0))
    assert not gluing_feasible([S(1, 1)], S(2, 0))
    # One piece with a loop: a closed surface cut along a non-separating curve.
    assert gluing_feasible([S(1, 2)], S(2, 0))


def test_gluing_rejects_inessential_pieces():
    assert not gluing_feasible([S(0, 2), S(2, 0)], S(2, 0))
    assert not gluing_feasible([], S(2, 0))


def test_gluing_rejects_closed_pieces_in_multis():
    assert not gluing_feasible([S(1, 0), S(1, 2)], S(2, 0))


def test_pattern_construction_and_validation():
    pattern = build_pattern([S(1, 1), S(1, 1)], S(2, 0))
    assert pattern is not None
    assert len(pattern.edges) == 1
    pattern.validate(S(2, 0))

    loop = build_pattern([S(1, 2)], S(2, 0))
    assert loop is not None
    assert loop.edges == ((0, 0),)
    loop.validate(S(2, 0))


def test_pattern_validate_catches_bad_data():
    bad = GluingPattern((S(1, 1), S(1, 1)), ())
    with pytest.raises(AssertionError):
        bad.validate(S(2, 0))


def test_enumeration_examples():
    found = {dec.pieces for dec in enumerate_decompositions(S(2, 0), 1, 2)}
    assert (S(1, 1), S(1, 1)) in found
    assert (S(2, 0),) in found

    found05 = {dec.pieces for dec in enumerate_decompositions(S(0, 5), 1, 3)}
    assert (S(0, 4), S(0, 4)) not in found05  # odd boundary sum
    assert (S(0, 5),) in found05

    assert list(enumerate_decompositions(S(1, 1), 2, 2)) == []


def test_enumeration_is_sound_and_sorted():
    for sig in small_sweep():
        seen = []
        for dec in enumerate_decompositions(sig, 1, -sig.euler):
            dec.pattern.validate(sig)
            assert all(p.complexity >= 1 for p in dec.pieces)
            assert list(dec.pieces) == sorted(dec.pieces, key=lambda p: (p.g, p.b))
            seen.append(dec.pieces)
        assert seen == sorted(seen)
        assert len(set(seen)) == len(seen)


def test_max_piece_count_search_examples():
    assert max_piece_count_search(S(2, 0), 3) == 1
    assert max_piece_count_search(S(2, 0), 1) == 2
    assert max_piece_count_search(S(0, 7), 1) == 2


def test_condition_a_examples():
    assert disjoint_pair_exists(S(2, 2), 2)
    assert not disjoint_pair_exists(S(2, 2), 3)
    cert = disjoint_pair_certificate(S(2, 2), 2)
    assert cert is not None and len(cert.pieces) == 2
    cert.validate(S(2, 2))


def test_condition_a_bound():
    # A disjoint pair at floor xi forces xi below half the complexity.
    for sig in small_sweep():
        for xi in range(1, sig.complexity + 1):
            if disjoint_pair_exists(sig, xi):
                assert xi < (3 * sig.g - 3 + sig.b) / 2


def test_condition_a_matches_piece_count():
    for sig in small_sweep():
        for xi in range(1, sig.complexity + 1):
            assert disjoint_pair_exists(sig, xi) == (max_piece_count_search(sig, xi) >= 2)


def test_condition_b_examples():
    assert disjoint_pairs_are_complements(S(2, 2), 2)
    assert not disjoint_pairs_are_complements(S(2, 2), 1)
    assert disjoint_pairs_are_complements(S(3, 0), 2)


def test_thickness_witness_certificates():
    witness = find_thickness_witness(S(2, 2), 1)
    assert witness is not None
    witness.validate(S(2, 2))
    pieces = witness.pattern.pieces
    assert pieces[witness.y].complexity >= 1
    assert pieces[witness.z].complexity >= 1

    witness30 = find_thickness_witness(S(3, 0), 1)
    assert witness30 is not None
    witness30.validate(S(3, 0))


def test_superadditivity_over_two_piece_splits():
    # Disjoint essential proper subsurfaces lose at least one curve's worth.
    for sig in small_sweep():
        for dec in enumerate_decompositions(sig, 1, 2):
            if len(dec.pieces) == 2:
                y, z = dec.pieces
                assert y.complexity + z.complexity + 1 <= sig.complexity


def test_no_proper_piece_attains_full_complexity():
    for sig in small_sweep():
        for dec in enumerate_decompositions(sig, 1, -sig.euler):
            if len(dec.pieces) >= 2:
                assert all(p.complexity < sig.complexity for p in dec.pieces)


def test_classify_exhaustive_examples():
    assert classify_exhaustive(S(2, 4), 5).kind == RELATIVELY_HYPERBOLIC
    assert classify_exhaustive(S(3, 0), 5).kind == RELATIVELY_HYPERBOLIC
    assert classify_exhaustive(S(3, 0), 6).kind == THICK
    assert classify_exhaustive(S(2, 0), 2).kind == HYPERBOLIC
    assert classify_exhaustive(S(2, 0), 2).source == "oracle"


def test_oracle_agrees_with_formula_on_piece_counts():
    for sig in small_sweep():
        for xi in range(1, sig.complexity + 1):
            assert max_piece_count_search(sig, xi) == max_piece_count(sig, xi)
