import pytest

from repkron import (
    RATIONALS,
    Vertex,
    ar_translate,
    cosyzygy,
    direct_sum,
    dualize,
    ext1_dim,
    hom_dim,
    indecomposable_projective,
    injective_hull,
    is_isomorphic,
    is_projective,
    nakayama_shift,
    parse_string,
    projective_cover,
    simple,
    stable_hom_dim,
    string_module,
    syzygy,
    top,
    validate,
)

F = RATIONALS


def M(word):
    return string_module(parse_string(word), F)


def test_projectives_are_valid_modules_of_dim_4():
    for v in (Vertex(1, 0), Vertex(2, 0), Vertex(1, -2), Vertex(2, 3)):
        P = indecomposable_projective(v, F)
        assert P.total_dim == 4
        assert not validate(P)
        assert is_projective(P)


def test_top_of_projective_is_its_simple():
    for v in (Vertex(1, 0), Vertex(2, 1)):
        t = top(indecomposable_projective(v, F))
        assert t.top.dim_vector == {v: 1}
        assert t.proj.is_valid()


def test_projective_cover_of_simple_is_the_projective():
    v = Vertex(1, 0)
    cd = projective_cover(simple(v, F))
    assert is_isomorphic(cd.cover.trimmed(), indecomposable_projective(v, F)) is not None
    assert cd.map.is_valid()
    assert cd.kernel_embed.is_valid()


def test_cover_map_kernel_is_the_syzygy():
    m = M("a0")
    cd = projective_cover(m)
    k = cd.kernel_embed.source
    assert k.total_dim == cd.cover.total_dim - m.total_dim
    assert not validate(syzygy(m))


def test_syzygy_of_projective_is_zero():
    for v in (Vertex(1, 0), Vertex(2, -1)):
        assert syzygy(indecomposable_projective(v, F)).is_zero()


def test_syzygy_identities_on_arrow_modules():
    assert is_isomorphic(syzygy(M("a0")), M("B0")) is not None
    assert is_isomorphic(syzygy(M("b0")), M("A0")) is not None
    assert is_isomorphic(syzygy(M("B0")), M("a-1")) is not None
    assert is_isomorphic(syzygy(M("A0")), M("b-1")) is not None


def test_dualize_is_involutive_and_exact():
    for word in ("a0", "a0 b0^-1", "B0"):
        m = M(word)
        assert dualize(dualize(m)).equals(m)
        assert not validate(dualize(m))


def test_injective_hull_and_cosyzygy_invert_syzygy():
    for word in ("a0", "1@0", "a0 b0^-1"):
        m = M(word)
        hd = injective_hull(m)
        assert hd.map.is_valid()
        assert is_isomorphic(cosyzygy(syzygy(m)), m.trimmed()) is not None


def test_nakayama_shift_relabels():
    m = nakayama_shift(M("a0"), 1)
    assert m.dim_vector == {Vertex(1, -1): 1, Vertex(2, -1): 1}
    assert nakayama_shift(m, -1).equals(M("a0"))


def test_ar_translate_fixes_arrow_modules():
    for word in ("a0", "b0", "A0", "B1"):
        m = M(word)
        assert is_isomorphic(ar_translate(m), m) is not None


def test_ar_translate_rejects_projectives():
    with pytest.raises(ValueError):
        ar_translate(indecomposable_projective(Vertex(1, 0), F))


def test_stable_hom_quotients_out_projective_factors():
    P = indecomposable_projective(Vertex(1, 0), F)
    assert stable_hom_dim(P, P) == 0
    assert hom_dim(P, P) > 0
    m = M("a0")
    assert stable_hom_dim(m, m) == 1
    # Adding a projective summand changes Hom but not stable Hom.
    assert stable_hom_dim(direct_sum(m, P), m) == 1


def test_ext1_values():
    s = simple(Vertex(1, 0), F)
    assert ext1_dim(s, s) == 0
    assert ext1_dim(M("a0"), M("a0")) == 1
