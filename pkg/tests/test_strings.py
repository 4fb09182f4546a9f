import pytest

from repkron import RATIONALS, Vertex, make_window, validate
from repkron.strings import (
    BadTokenError,
    NonComposableError,
    NotReducedError,
    RelationViolationError,
    enumerate_strings,
    orbit_graph,
    parse_string,
    simple,
    string_label,
    string_module,
)

F = RATIONALS


def test_parse_trivial_word():
    w = parse_string("1@0")
    assert len(w) == 0
    assert w.walk_vertices == (Vertex(1, 0),)
    assert string_module(w, F).equals(simple(Vertex(1, 0), F))


def test_parse_word_and_walk():
    w = parse_string("a0 b0^-1")
    assert w.walk_vertices == (Vertex(1, 0), Vertex(2, 0), Vertex(1, 0))
    m = string_module(w, F)
    assert m.dim_vector == {Vertex(1, 0): 2, Vertex(2, 0): 1}
    assert not validate(m)


def test_parse_errors_are_distinguished():
    with pytest.raises(BadTokenError):
        parse_string("q7")
    with pytest.raises(NonComposableError):
        parse_string("a0 a1")
    with pytest.raises(NotReducedError):
        parse_string("a0 a0^-1")
    with pytest.raises(RelationViolationError):
        parse_string("a0 A0")  # the commutativity relation
    with pytest.raises(RelationViolationError):
        parse_string("a0 B0")  # a zero relation
    with pytest.raises(RelationViolationError):
        parse_string("B0^-1 a0^-1")  # inverse of a zero relation


def test_canonical_identifies_inverse_words():
    w = parse_string("a0 b0^-1")
    assert w.canonical().tokens == w.reverse_inverse().canonical().tokens
    m1 = string_module(w, F)
    m2 = string_module(w.reverse_inverse(), F)
    from repkron import is_isomorphic

    assert is_isomorphic(m1, m2) is not None


def test_enumerate_strings_counts_and_validity():
    words = enumerate_strings(make_window(-1, 1), 3)
    assert len(words) == len({w.tokens for w in words})
    trivial = [w for w in words if len(w) == 0]
    assert len(trivial) == 6  # one per window vertex
    arrows = [w for w in words if len(w) == 1]
    assert len(arrows) == 10  # one per window arrow
    for w in words:
        assert not validate(string_module(w, F))
        # canonical representative only
        assert w.canonical().tokens == w.tokens


def test_enumerate_is_deterministic():
    a = [w.text for w in enumerate_strings(make_window(-1, 1), 3)]
    b = [w.text for w in enumerate_strings(make_window(-1, 1), 3)]
    assert a == b


def test_string_label_recovers_words():
    for word in ("1@0", "a0", "a0 b0^-1"):
        m = string_module(parse_string(word), F)
        assert string_label(m) == parse_string(word).canonical().text


def test_orbit_graph_tau_loop():
    m = string_module(parse_string("a0"), F)
    g = orbit_graph(m, 1)
    assert g.nodes[0].label == "a0"
    assert (0, 0, "tau") in g.edges
    data = g.to_json()
    assert {e["op"] for e in data["edges"]} <= {"omega", "omega_inv", "nu", "tau"}
    assert all(not n["undecided"] for n in data["nodes"])
