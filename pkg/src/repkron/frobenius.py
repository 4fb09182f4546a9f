"""Projective-injectives, covers and hulls, syzygies, the layer shift, the
AR translate, stable Hom and Ext^1.

The module category here is a Frobenius category: projectives and
injectives coincide, every module has a projective cover and an injective
hull, and the syzygy operator is an equivalence on the stable category.
Injective hulls are computed by dualizing projective covers through the
fixed opposite-quiver relabeling (``Vertex.dual`` / ``Arrow.dual``), which
is an exact involution.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .linalg import Matrix, kernel_basis, rank, solve
from .quiver import Arrow, QuiverWindow, Vertex
from .representation import (
    Morphism,
    Representation,
    UndecidedIndecomposability,
    _HomLayout,
    common_window,
    hom_basis,
    hom_dim,
    is_indecomposable,
)


class FrobeniusInvariantError(AssertionError):
    """The two independent stable-Hom computations disagreed."""


@dataclass
class CoverData:
    """A minimal projective cover with its kernel embedding (the syzygy)."""

    cover: Representation
    map: Morphism  # cover ->> M (surjective)
    kernel_embed: Morphism  # syzygy -> cover (injective)


@dataclass
class HullData:
    """A minimal injective hull with its cokernel projection (the cosyzygy)."""

    hull: Representation
    map: Morphism  # M -> hull (injective)
    cokernel_proj: Morphism  # hull ->> cosyzygy


def _projective_with_basis(v: Vertex, field):
    """The 4-dimensional projective-injective at v, plus its path basis.

    Returns ``(rep, paths)`` where ``paths[w]`` lists, for each basis vector
    of the projective at vertex w, the arrow sequence carrying the top
    generator there (applied left to right).
    """
    f = field
    one, zero = f.one, f.zero
    z = v.z
    w = QuiverWindow(z - 1, z)
    if v.layer == 1:
        a, b = Arrow("a", z), Arrow("b", z)
        A, B = Arrow("A", z), Arrow("B", z)
        dims = {Vertex(1, z): 1, Vertex(2, z): 2, Vertex(1, z - 1): 1}
        mats = {
            a: Matrix(f, [[one], [zero]]),
            b: Matrix(f, [[zero], [one]]),
            A: Matrix(f, [[one, zero]]),
            B: Matrix(f, [[zero, one]]),
        }
        paths = {
            Vertex(1, z): [()],
            Vertex(2, z): [(a,), (b,)],
            Vertex(1, z - 1): [(a, A)],
        }
    else:
        A, B = Arrow("A", z), Arrow("B", z)
        a1, b1 = Arrow("a", z - 1), Arrow("b", z - 1)
        dims = {Vertex(2, z): 1, Vertex(1, z - 1): 2, Vertex(2, z - 1): 1}
        mats = {
            A: Matrix(f, [[one], [zero]]),
            B: Matrix(f, [[zero], [one]]),
            a1: Matrix(f, [[one, zero]]),
            b1: Matrix(f, [[zero, one]]),
        }
        paths = {
            Vertex(2, z): [()],
            Vertex(1, z - 1): [(A,), (B,)],
            Vertex(2, z - 1): [(A, a1)],
        }
    return Representation(w, f, dims, mats), paths


def indecomposable_projective(v: Vertex, field) -> Representation:
    """P_v: total dimension 4, radical series as in the projective diagrams."""
    return _projective_with_basis(v, field)[0]


def _pivot_columns(A: Matrix):
    """Indices of a deterministic column basis of the column space of A."""
    from .linalg import _rref

    rows = [list(r) for r in A.entries]
    return _rref(rows, A.domain, A.cols)


def _radical_matrix(M: Representation, v: Vertex) -> Matrix:
    """Columns spanning rad M at v (sum of incoming arrow images)."""
    incoming = [a for a in M.window.arrows if a.target == v]
    out = Matrix.zero(M.field, M.dim(v), 0)
    for a in incoming:
        out = out.hstack(M.mat(a))
    return out


def _top_complement_indices(M: Representation, v: Vertex):
    """Standard basis indices of M_v completing rad M_v to all of M_v."""
    radm = _radical_matrix(M, v)
    d = M.dim(v)
    aug = radm.hstack(Matrix.identity(M.field, d))
    pivots = _pivot_columns(aug)
    return [c - radm.cols for c in pivots if c >= radm.cols]


@dataclass
class TopData:
    """The semisimple quotient M / rad M with its projection."""

    top: Representation  # all arrow matrices zero
    proj: Morphism  # M ->> top


def top(M: Representation) -> TopData:
    f = M.field
    dims = {}
    comps = {}
    for v in M.window.vertices:
        radm = _radical_matrix(M, v)
        rad_pivots = _pivot_columns(radm)
        compl = _top_complement_indices(M, v)
        dims[v] = len(compl)
        d = M.dim(v)
        if d == 0:
            comps[v] = Matrix.zero(f, 0, 0)
            continue
        # Full basis: radical column basis then the chosen complement vectors.
        cols = [radm.col(j) for j in rad_pivots]
        for idx in compl:
            e = [f.zero] * d
            e[idx] = f.one
            cols.append(e)
        F = Matrix.from_columns(f, cols, d)
        sol = solve(F, Matrix.identity(f, d))
        assert sol is not None
        inv = sol.particular
        comps[v] = Matrix(
            f, [inv.entries[len(rad_pivots) + i] for i in range(len(compl))], len(compl), d
        )
    top_rep = Representation(M.window, f, dims)
    return TopData(top_rep, Morphism(M, top_rep, comps))


def projective_cover(M: Representation) -> CoverData:
    """The minimal projective cover of M with its kernel."""
    f = M.field
    generators = []  # (vertex, standard-basis index) in deterministic order
    for v in sorted(M.window.vertices):
        for idx in _top_complement_indices(M, v):
            generators.append((v, idx))
    if not generators:
        zero = Representation(M.window, f)
        return CoverData(zero, Morphism(zero, M, {}), Morphism(zero, zero, {}))

    window = M.window
    summands = []
    for v, idx in generators:
        rep, paths = _projective_with_basis(v, f)
        window = window.merge(rep.window)
        summands.append((v, idx, rep, paths))

    Mw = M.rewindow(window)
    # Assemble the direct sum of the summands with explicit basis bookkeeping.
    dims = {v: 0 for v in window.vertices}
    basis = {v: [] for v in window.vertices}  # (summand index, path)
    for si, (_, _, rep, paths) in enumerate(summands):
        for v in window.vertices:
            for p in paths.get(v, []):
                basis[v].append((si, p))
            dims[v] += rep.dim(v)
    mats = {}
    for a in window.arrows:
        cols = []
        for si, p in basis[a.source]:
            rep = summands[si][2]
            # Image of this basis path under the arrow, in the target basis.
            if not rep.window.contains_arrow(a):
                cols.append([f.zero] * dims[a.target])
                continue
            local_src = summands[si][3][a.source]
            local_tgt = summands[si][3].get(a.target, [])
            j = local_src.index(p)
            img = rep.mat(a).col(j)
            col = []
            for sk, q in basis[a.target]:
                if sk != si:
                    col.append(f.zero)
                else:
                    col.append(img[local_tgt.index(q)])
            cols.append(col)
        mats[a] = Matrix.from_columns(f, cols, dims[a.target])
    cover = Representation(window, f, dims, mats)

    # Cover map: generator e -> chosen top representative, extended by paths.
    comps = {}
    for v in window.vertices:
        cols = []
        for si, p in basis[v]:
            gv, idx = generators[si]
            col = [f.zero] * Mw.dim(gv)
            col[idx] = f.one
            vec = Matrix.column(f, col)
            for arrow in p:
                vec = Mw.mat(arrow) @ vec
            cols.append(vec.col(0))
        comps[v] = Matrix.from_columns(f, cols, Mw.dim(v))
    cover_map = Morphism(cover, Mw, comps)
    for v in window.vertices:
        assert rank(comps[v]) == Mw.dim(v), "cover map must be surjective"

    # Kernel as a subrepresentation of the cover.
    K = {v: kernel_basis(comps[v]) for v in window.vertices}
    kdims = {v: K[v].cols for v in window.vertices}
    kmats = {}
    for a in window.arrows:
        sol = solve(K[a.target], cover.mat(a) @ K[a.source])
        assert sol is not None, "kernel must be closed under the arrow action"
        kmats[a] = sol.particular
    kernel = Representation(window, f, kdims, kmats)
    return CoverData(cover, cover_map, Morphism(kernel, cover, K))


def syzygy(M: Representation) -> Representation:
    """Omega M: the kernel of the minimal projective cover (projective-free)."""
    return projective_cover(M).kernel_embed.source.trimmed()


def dualize(M: Representation) -> Representation:
    """The standard k-dual, pulled back along the opposite-quiver relabeling.

    An exact involution: ``dualize(dualize(M))`` equals M on the nose.
    """
    w = M.window.dual()
    dims = {v.dual(): M.dim(v) for v in M.window.vertices}
    mats = {a.dual(): M.mat(a).transpose() for a in M.window.arrows}
    return Representation(w, M.field, dims, mats)


def dual_morphism(f: Morphism) -> Morphism:
    """Contravariant image of a morphism under :func:`dualize`."""
    src = dualize(f.target)
    tgt = dualize(f.source)
    comps = {v.dual(): f.comps[v].transpose() for v in f.comps}
    return Morphism(src, tgt, comps)


def injective_hull(M: Representation) -> HullData:
    cd = projective_cover(dualize(M))
    return HullData(
        hull=dualize(cd.cover),
        map=dual_morphism(cd.map),
        cokernel_proj=dual_morphism(cd.kernel_embed),
    )


def cosyzygy(M: Representation) -> Representation:
    """Omega^{-1} M: the cokernel of the minimal injective hull."""
    return injective_hull(M).cokernel_proj.target.trimmed()


def is_projective(M: Representation) -> bool:
    return projective_cover(M).kernel_embed.source.is_zero()


def nakayama_shift(M: Representation, k: int) -> Representation:
    """Relabel every vertex index z by z - k; matrices unchanged."""
    w = M.window.shifted(k)
    dims = {v.shifted(k): M.dim(v) for v in M.window.vertices}
    mats = {a.shifted(k): M.mat(a) for a in M.window.arrows}
    return Representation(w, M.field, dims, mats)


def ar_translate(M: Representation) -> Representation:
    """The AR translate: the layer shift applied to the double syzygy.

    Defined for indecomposable non-projective modules; on decomposable or
    undecided inputs the same formula is computed with a warning.
    """
    if is_projective(M):
        raise ValueError("the AR translate is undefined for projective modules")
    try:
        if not is_indecomposable(M):
            warnings.warn("AR translate of a decomposable module", stacklevel=2)
    except UndecidedIndecomposability:
        warnings.warn("indecomposability undecided; computing anyway", stacklevel=2)
    # The double syzygy moves support one layer down; the shift restores it.
    return nakayama_shift(syzygy(syzygy(M)), -1)


def _factoring_rank_via_hull(M: Representation, N: Representation) -> int:
    """dim of the maps M -> N factoring through the injective hull of M."""
    emb = injective_hull(M.trimmed()).map
    w = emb.source.window.merge(N.window)
    emb = emb.rewindow(w)
    Nw = N.rewindow(w)
    layout = _HomLayout(w, lambda v: Nw.dim(v), lambda v: emb.source.dim(v))
    cols = []
    f = M.field
    for g in hom_basis(emb.target, Nw):
        cols.append(layout.flatten(f, g.compose(emb).comps))
    if not cols:
        return 0
    return rank(Matrix.from_columns(f, cols, layout.size))


def _factoring_rank_via_cover(M: Representation, N: Representation) -> int:
    """dim of the maps M -> N factoring through the projective cover of N."""
    pc = projective_cover(N.trimmed())
    proj = pc.map
    w = proj.source.window.merge(M.window)
    proj = proj.rewindow(w)
    Mw = M.rewindow(w)
    layout = _HomLayout(w, lambda v: proj.target.dim(v), lambda v: Mw.dim(v))
    cols = []
    f = M.field
    for h in hom_basis(Mw, proj.source):
        cols.append(layout.flatten(f, proj.compose(h).comps))
    if not cols:
        return 0
    return rank(Matrix.from_columns(f, cols, layout.size))


def stable_hom_dim(M: Representation, N: Representation) -> int:
    """dim Hom(M, N) minus the maps factoring through a projective.

    Computed two independent ways (hull embedding of M, projective cover of
    N); a disagreement is an invariant breach and raises hard.
    """
    M, N = common_window(M, N)
    total = hom_dim(M, N)
    via_hull = _factoring_rank_via_hull(M, N)
    via_cover = _factoring_rank_via_cover(M, N)
    if via_hull != via_cover:
        raise FrobeniusInvariantError(
            f"projective-factoring dimensions disagree: hull route {via_hull}, "
            f"cover route {via_cover}"
        )
    return total - via_hull


def ext1_dim(M: Representation, N: Representation) -> int:
    """dim Ext^1(M, N), as stable Hom out of the syzygy of M."""
    return stable_hom_dim(syzygy(M), N)
