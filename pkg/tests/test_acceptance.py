"""The acceptance gate: one test per criterion, each printing a single
pass/fail line on the real stdout (visible even under pytest capture)."""

import sys
import time

import pytest

from repkron import (
    Field,
    RATIONALS,
    TruncatedRing,
    Vertex,
    ar_translate,
    classify_versal_ring,
    cosyzygy,
    dualize,
    ext1_dim,
    extend_lift,
    first_order_lifts,
    indecomposable_projective,
    is_isomorphic,
    lift_from_tangent,
    make_window,
    simple,
    stable_hom_dim,
    string_module,
    syzygy,
    top,
    validate,
    verify_thm1_invariants,
)
from repkron.frobenius import _factoring_rank_via_cover, _factoring_rank_via_hull
from repkron.strings import enumerate_strings

F = RATIONALS
WINDOW = make_window(-2, 2)


def _announce(num, desc, body):
    try:
        body()
    except BaseException:
        print(f"criterion {num} ({desc}): FAIL", file=sys.__stdout__, flush=True)
        raise
    print(f"criterion {num} ({desc}): PASS", file=sys.__stdout__, flush=True)


@pytest.fixture(scope="module")
def corpus():
    words = enumerate_strings(WINDOW, 4)
    assert len(words) >= 20
    return [(w, string_module(w, F)) for w in words]


def test_criterion_1_projective_structure():
    def body():
        # P at 1@0: top S_{1@0}, two middle factors S_{2@0}, socle S_{1@-1};
        # P at 2@0: top S_{2@0}, two middle factors S_{1@-1}, socle S_{2@-1}.
        expected = {
            Vertex(1, 0): (Vertex(1, 0), Vertex(2, 0), Vertex(1, -1)),
            Vertex(2, 0): (Vertex(2, 0), Vertex(1, -1), Vertex(2, -1)),
        }
        for v, (top_v, mid_v, soc_v) in expected.items():
            P = indecomposable_projective(v, F)
            assert P.total_dim == 4
            assert validate(P) == []
            assert top(P).top.dim_vector == {top_v: 1}
            # The socle is the top of the dual, read back through the duality.
            socle_dims = {u.dual(): d for u, d in top(dualize(P)).top.dim_vector.items()}
            assert socle_dims == {soc_v: 1}
            # Remaining composition factors: the two middle ones.
            middle = dict(P.dim_vector)
            middle[top_v] -= 1
            middle[soc_v] -= 1
            assert {u: d for u, d in middle.items() if d} == {mid_v: 2}

    _announce(1, "projective structure", body)


def _simple_facts(field):
    out = []
    for v in sorted(WINDOW.vertices):
        S = simple(v, field)
        r = classify_versal_ring(S)
        out.append((v.name, ext1_dim(S, S), stable_hom_dim(S, S), r.verdict))
    return out


def test_criterion_2_simples_are_rigid():
    def body():
        for name, e, s, verdict in _simple_facts(F):
            assert (e, s, verdict) == (0, 1, "k"), name

    _announce(2, "simples: verdict k", body)


def _arrow_facts(field):
    out = []
    from repkron import parse_string

    for a in WINDOW.arrows:
        M = string_module(parse_string(a.name), field)
        tangent = first_order_lifts(M)
        lifted, obs = (None, None)
        if tangent:
            lifted, obs = extend_lift(
                lift_from_tangent(tangent[0], TruncatedRing(field, 2)), 6
            )
        r = classify_versal_ring(M)
        out.append(
            (
                a.name,
                stable_hom_dim(M, M),
                ext1_dim(M, M),
                len(tangent),
                lifted.order if lifted else 0,
                obs is None,
                r.verdict,
            )
        )
    return out


def test_criterion_3_arrow_modules_give_power_series():
    def body():
        for name, s, e, t, reached, unobstructed, verdict in _arrow_facts(F):
            assert (s, e, t) == (1, 1, 1), name
            assert reached == 6 and unobstructed, name
            assert verdict == "k[[t]]", name

    _announce(3, "arrow modules: verdict k[[t]]", body)


def test_criterion_4_tangent_space_oracle_equivalence(corpus):
    def body():
        t0 = time.monotonic()
        for w, M in corpus:
            assert len(first_order_lifts(M)) == ext1_dim(M, M), w.text
        assert time.monotonic() - t0 < 30

    _announce(4, "first-order lifts = Ext^1 on corpus", body)


def test_criterion_5_stable_invariance(corpus):
    def body():
        for w, M in corpus:
            if stable_hom_dim(M, M) != 1:
                continue
            report = verify_thm1_invariants(M, test_order=6)
            assert report["consistent"], w.text

    _announce(5, "classification is a stable invariant", body)


def test_criterion_6_syzygy_identities(corpus):
    def body():
        from repkron import parse_string

        pairs = [("a0", "B0"), ("b0", "A0")]
        for src, dst in pairs:
            S = string_module(parse_string(src), F)
            D = string_module(parse_string(dst), F)
            assert is_isomorphic(syzygy(S), D) is not None, (src, dst)
        for v in sorted(WINDOW.vertices):
            assert syzygy(indecomposable_projective(v, F)).is_zero(), v.name
        for w, M in corpus:
            assert is_isomorphic(cosyzygy(syzygy(M)), M.trimmed()) is not None, w.text

    _announce(6, "syzygy identities", body)


def test_criterion_7_frobenius_cross_check(corpus):
    def body():
        ten = [M for _, M in corpus[:10]]
        assert len(ten) == 10
        for M in ten:
            for N in ten:
                hull = _factoring_rank_via_hull(M, N)
                cover = _factoring_rank_via_cover(M, N)
                assert hull == cover
                stable_hom_dim(M, N)  # also exercises the built-in guard

    _announce(7, "stable Hom routes agree on 100 pairs", body)


def test_criterion_8_tau_fixed_points():
    def body():
        from repkron import parse_string

        for a in make_window(-1, 1).arrows:
            M = string_module(parse_string(a.name), F)
            assert is_isomorphic(ar_translate(M), M) is not None, a.name

    _announce(8, "AR translate fixes arrow modules", body)


def test_criterion_9_field_robustness():
    def body():
        fields = [F, Field(5), Field(101)]
        simple_runs = [_simple_facts(f) for f in fields]
        arrow_runs = [_arrow_facts(f) for f in fields]
        assert simple_runs[0] == simple_runs[1] == simple_runs[2]
        assert arrow_runs[0] == arrow_runs[1] == arrow_runs[2]

    _announce(9, "identical over Q, F_5, F_101", body)
