import pytest

from repkron.quiver import (
    Arrow,
    QuiverWindow,
    Vertex,
    forbidden_pairs,
    parse_arrow,
    parse_vertex,
    paths_of_length_2,
)


def test_arrow_endpoints():
    assert Arrow("a", 0).source == Vertex(1, 0)
    assert Arrow("a", 0).target == Vertex(2, 0)
    assert Arrow("A", 0).source == Vertex(2, 0)
    assert Arrow("A", 0).target == Vertex(1, -1)


def test_parsers():
    assert parse_vertex("2@-3") == Vertex(2, -3)
    assert parse_arrow("B-1") == Arrow("B", -1)
    with pytest.raises(ValueError):
        parse_vertex("3@0")
    with pytest.raises(ValueError):
        parse_arrow("c0")


def test_window_counts():
    w = QuiverWindow(-1, 1)
    assert len(w.vertices) == 6
    # a, b at each of 3 layers; A, B only where the target stays inside.
    assert len(w.arrows) == 3 * 2 + 2 * 2
    assert len(w.relations) == 2 * 6


def test_every_composable_pair_is_in_a_relation():
    w = QuiverWindow(-1, 0)
    pairs = paths_of_length_2(w)
    assert len(pairs) == 8
    assert set(pairs) == set(forbidden_pairs(w))


def test_relations_reference_window_arrows_only():
    w = QuiverWindow(-2, 2)
    arrows = set(w.arrows)
    for rel in w.relations:
        for inner, outer in rel.pairs():
            assert inner in arrows and outer in arrows
            assert inner.target == outer.source


def test_dual_is_involutive_and_preserves_incidence():
    for a in QuiverWindow(-2, 2).arrows:
        assert a.dual().dual() == a
        assert a.dual().source == a.target.dual()
        assert a.dual().target == a.source.dual()


def test_shift_and_merge():
    w = QuiverWindow(0, 1)
    assert w.shifted(1) == QuiverWindow(-1, 0)
    assert w.merge(QuiverWindow(-2, 0)) == QuiverWindow(-2, 1)
    with pytest.raises(ValueError):
        QuiverWindow(1, 0)
