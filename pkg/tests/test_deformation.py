import pytest

from repkron import (
    Field,
    RATIONALS,
    TruncatedRing,
    Vertex,
    classify_versal_ring,
    direct_sum,
    ext1_dim,
    extend_lift,
    first_order_lifts,
    indecomposable_projective,
    lift_from_tangent,
    parse_string,
    simple,
    string_module,
    trivial_lift,
    truncate_lift,
    verify_thm1_invariants,
)
from repkron.deformation import apply_gauge
from repkron.linalg import Matrix

F = RATIONALS


def M(word, field=F):
    return string_module(parse_string(word), field)


def test_simple_is_rigid():
    s = simple(Vertex(1, 0), F)
    assert first_order_lifts(s) == []
    r = classify_versal_ring(s)
    assert (r.stable_end_dim, r.ext1_dim, r.verdict) == (1, 0, "k")
    assert r.obstruction is None


def test_arrow_module_tangent_line():
    m = M("a0")
    tangent = first_order_lifts(m)
    assert len(tangent) == 1
    # The tangent direction is not a coboundary: its lift is a valid
    # non-trivial module over the dual numbers.
    lift = lift_from_tangent(tangent[0], TruncatedRing(F, 2))
    assert lift.validate() == []
    assert any(not lift.coeff(a, 1).is_zero() for a in m.window.arrows)


def test_trivial_lift_extends_forever():
    lift = trivial_lift(M("a0"), TruncatedRing(F, 2))
    out, obs = extend_lift(lift, 5)
    assert obs is None and out.order == 5
    assert out.validate() == []


def test_extend_and_truncate_roundtrip():
    m = M("a0")
    (cls,) = first_order_lifts(m)
    lift = lift_from_tangent(cls, TruncatedRing(F, 2))
    out, obs = extend_lift(lift, 6)
    assert obs is None and out.order == 6
    back = truncate_lift(out, 2)
    assert back.validate() == []
    assert back.mats.keys() == lift.mats.keys()


def test_gauge_preserves_validity():
    m = M("a0")
    (cls,) = first_order_lifts(m)
    ring = TruncatedRing(F, 3)
    lift, _ = extend_lift(lift_from_tangent(cls, TruncatedRing(F, 2)), 3)
    h = {}
    for v in m.window.vertices:
        d = m.dim(v)
        g = Matrix.identity(ring, d)
        if d:  # I + t E_00 at every supported vertex
            rows = [list(r) for r in g.entries]
            rows[0][0] = ring.add(rows[0][0], ring.t)
            g = Matrix(ring, rows, d, d)
        h[v] = g
    gauged = apply_gauge(lift, h)
    assert gauged.validate() == []


def test_gauge_must_reduce_to_identity():
    m = M("a0")
    ring = TruncatedRing(F, 2)
    lift = trivial_lift(m, ring)
    bad = {v: Matrix.zero(ring, m.dim(v), m.dim(v)) for v in m.window.vertices}
    with pytest.raises(ValueError):
        apply_gauge(lift, bad)


def test_tangent_dim_matches_ext1_on_longer_strings():
    for word in ("a0 b0^-1", "A0 B0^-1", "B0"):
        m = M(word)
        assert len(first_order_lifts(m)) == ext1_dim(m, m)


def test_classification_json_shape():
    data = classify_versal_ring(M("a0")).to_json()
    assert data == {
        "module": "a0",
        "stable_end_dim": 1,
        "ext1_dim": 1,
        "verdict": "k[[t]]",
        "lift_order_reached": 6,
        "obstruction": None,
    }


def test_classify_rejects_zero_module():
    from repkron import zero_representation

    with pytest.raises(ValueError):
        classify_versal_ring(zero_representation(F))


def test_thm1_invariants_consistent():
    report = verify_thm1_invariants(M("a0"), test_order=4)
    assert report["consistent"]
    names = set(report["reports"])
    assert names == {"module", "syzygy", "shift", "ar_translate", "plus_projective"}


def test_thm1_rejects_projective_input():
    P = indecomposable_projective(Vertex(1, 0), F)
    with pytest.raises(ValueError):
        verify_thm1_invariants(P)


def test_classification_over_prime_field():
    for p in (5, 101):
        r = classify_versal_ring(M("a0", Field(p)))
        assert (r.ext1_dim, r.verdict) == (1, "k[[t]]")
