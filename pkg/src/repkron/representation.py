"""Finite-dimensional modules over a quiver window, with Hom spaces and
isomorphism/indecomposability tests.

A representation assigns a dimension to every window vertex and a matrix to
every window arrow; it is a genuine module exactly when all window
relations hold.  All objects are immutable after construction and every
operation here is a pure function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .linalg import Matrix, kernel_basis, rank, solve
from .quiver import QuiverWindow, Vertex, parse_arrow, parse_vertex
from .scalars import Field, field_from_name


class UndecidedIsomorphism(Exception):
    """The invertible-combination search was exhausted without a verdict."""


class UndecidedIndecomposability(Exception):
    """The trace-form radical criterion does not apply (small characteristic)."""


class Representation:
    """A module over the bound quiver restricted to a window.

    ``dims`` may omit vertices (default 0) and ``mats`` may omit arrows
    (default zero matrix).  Shapes are checked eagerly; relation
    satisfaction is checked by :func:`validate`.
    """

    __slots__ = ("window", "field", "_dims", "_mats", "__dict__")

    def __init__(self, window: QuiverWindow, field: Field, dims=None, mats=None):
        dims = dims or {}
        mats = mats or {}
        self.window = window
        self.field = field
        full_dims = {}
        for v in window.vertices:
            d = dims.get(v, 0)
            if d < 0:
                raise ValueError(f"negative dimension at {v.name}")
            full_dims[v] = d
        for v in dims:
            if not window.contains_vertex(v):
                if dims[v]:
                    raise ValueError(f"vertex {v.name} outside window")
        full_mats = {}
        for a in window.arrows:
            r, c = full_dims[a.target], full_dims[a.source]
            m = mats.get(a)
            if m is None:
                m = Matrix.zero(field, r, c)
            elif (m.rows, m.cols) != (r, c):
                raise ValueError(
                    f"matrix for {a.name} has shape {m.rows}x{m.cols}, expected {r}x{c}"
                )
            elif m.domain != field:
                raise ValueError(f"matrix for {a.name} over wrong field")
            full_mats[a] = m
        for a in mats:
            if a not in full_mats and not mats[a].is_zero():
                raise ValueError(f"arrow {a.name} outside window")
        self._dims = full_dims
        self._mats = full_mats

    # -- access ------------------------------------------------------------

    def dim(self, v: Vertex) -> int:
        return self._dims.get(v, 0)

    def mat(self, a) -> Matrix:
        if a in self._mats:
            return self._mats[a]
        return Matrix.zero(self.field, self.dim(a.target), self.dim(a.source))

    @cached_property
    def total_dim(self) -> int:
        return sum(self._dims.values())

    @cached_property
    def dim_vector(self) -> dict:
        return {v: d for v, d in sorted(self._dims.items()) if d}

    @property
    def support(self):
        return tuple(sorted(v for v, d in self._dims.items() if d))

    def is_zero(self) -> bool:
        return self.total_dim == 0

    # -- windowing ---------------------------------------------------------

    def rewindow(self, new_window: QuiverWindow) -> "Representation":
        for v in self.support:
            if not new_window.contains_vertex(v):
                raise ValueError(f"new window drops supported vertex {v.name}")
        dims = {v: d for v, d in self._dims.items() if d}
        mats = {a: m for a, m in self._mats.items() if new_window.contains_arrow(a)}
        return Representation(new_window, self.field, dims, mats)

    def trimmed(self) -> "Representation":
        """Shrink the window to the support range (zero module -> [0, 0])."""
        zs = [v.z for v in self.support]
        if not zs:
            return Representation(QuiverWindow(0, 0), self.field)
        return self.rewindow(QuiverWindow(min(zs), max(zs)))

    # -- equality ----------------------------------------------------------

    def equals(self, other: "Representation") -> bool:
        """Structural equality on the merged window (not isomorphism)."""
        if self.field != other.field:
            return False
        w = self.window.merge(other.window)
        a, b = self.rewindow(w), other.rewindow(w)
        return a._dims == b._dims and a._mats == b._mats

    def __repr__(self):
        dv = ", ".join(f"{v.name}:{d}" for v, d in self.dim_vector.items())
        return f"Representation({self.field.name}; {dv or '0'})"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        mats = {}
        for a, m in sorted(self._mats.items()):
            if not m.is_zero():
                mats[a.name] = [[self.field.format(x) for x in row] for row in m.entries]
        return {
            "field": self.field.name,
            "window": [self.window.z_min, self.window.z_max],
            "dims": {v.name: d for v, d in sorted(self._dims.items()) if d},
            "mats": mats,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Representation":
        field = field_from_name(data["field"])
        window = QuiverWindow(*data["window"])
        dims = {parse_vertex(k): v for k, v in data.get("dims", {}).items()}
        mats = {}
        for name, rows in data.get("mats", {}).items():
            a = parse_arrow(name)
            mats[a] = Matrix(field, [[field.parse(x) for x in row] for row in rows])
        return cls(window, field, dims, mats)


def zero_representation(field: Field, window: QuiverWindow | None = None) -> Representation:
    return Representation(window or QuiverWindow(0, 0), field)


def validate(M: Representation) -> list:
    """Relation violations of M; empty iff M is a module over the bound quiver."""
    violations = []
    f = M.field
    for rel in M.window.relations:
        acc = None
        for sign, (inner, outer) in rel.terms:
            term = M.mat(outer) @ M.mat(inner)
            if sign < 0:
                term = -term
            acc = term if acc is None else acc + term
        if acc is not None and not acc.is_zero():
            desc = " ".join(
                f"{'+' if s > 0 else '-'}{o.name}o{i.name}" for s, (i, o) in rel.terms
            )
            violations.append(f"{rel.kind} relation {desc} violated")
    return violations


@dataclass
class Morphism:
    """A module morphism given by one matrix per vertex of a shared window."""

    source: Representation
    target: Representation
    comps: dict  # Vertex -> Matrix

    def __post_init__(self):
        if self.source.window != self.target.window:
            raise ValueError("morphism endpoints must share a window")
        full = {}
        for v in self.source.window.vertices:
            m = self.comps.get(v)
            r, c = self.target.dim(v), self.source.dim(v)
            if m is None:
                m = Matrix.zero(self.source.field, r, c)
            elif (m.rows, m.cols) != (r, c):
                raise ValueError(f"component at {v.name} has wrong shape")
            full[v] = m
        self.comps = full

    @classmethod
    def identity(cls, M: Representation) -> "Morphism":
        return cls(M, M, {v: Matrix.identity(M.field, M.dim(v)) for v in M.window.vertices})

    def check(self) -> list:
        """Intertwining violations (empty iff this is a genuine morphism)."""
        out = []
        for a in self.source.window.arrows:
            lhs = self.comps[a.target] @ self.source.mat(a)
            rhs = self.target.mat(a) @ self.comps[a.source]
            if lhs != rhs:
                out.append(f"intertwining fails at arrow {a.name}")
        return out

    def is_valid(self) -> bool:
        return not self.check()

    def compose(self, other: "Morphism") -> "Morphism":
        """self o other (apply ``other`` first)."""
        if other.target.window != self.source.window:
            raise ValueError("composition across different windows; rewindow first")
        return Morphism(
            other.source,
            self.target,
            {v: self.comps[v] @ other.comps[v] for v in self.source.window.vertices},
        )

    def rewindow(self, new_window: QuiverWindow) -> "Morphism":
        src = self.source.rewindow(new_window)
        tgt = self.target.rewindow(new_window)
        comps = {v: m for v, m in self.comps.items() if new_window.contains_vertex(v)}
        return Morphism(src, tgt, comps)

    def is_isomorphism(self) -> bool:
        return all(
            m.rows == m.cols and rank(m) == m.rows for m in self.comps.values()
        )

    def scale(self, c) -> "Morphism":
        return Morphism(self.source, self.target, {v: m.scale(c) for v, m in self.comps.items()})

    def add(self, other: "Morphism") -> "Morphism":
        return Morphism(
            self.source, self.target, {v: self.comps[v] + other.comps[v] for v in self.comps}
        )


def common_window(M: Representation, N: Representation):
    if M.field != N.field:
        raise ValueError("representations over different fields")
    w = M.window.merge(N.window)
    return M.rewindow(w), N.rewindow(w)


class _HomLayout:
    """Index layout for flattening vertex-indexed matrix families."""

    def __init__(self, window, row_dims, col_dims):
        self.vertices = sorted(window.vertices)
        self.shapes = {v: (row_dims(v), col_dims(v)) for v in self.vertices}
        self.offsets = {}
        pos = 0
        for v in self.vertices:
            self.offsets[v] = pos
            r, c = self.shapes[v]
            pos += r * c
        self.size = pos

    def index(self, v, i, j):
        return self.offsets[v] + i * self.shapes[v][1] + j

    def flatten(self, field, comps):
        vec = [field.zero] * self.size
        for v in self.vertices:
            m = comps[v]
            for i in range(m.rows):
                for j in range(m.cols):
                    vec[self.index(v, i, j)] = m.entries[i][j]
        return vec

    def unflatten(self, field, vec):
        comps = {}
        for v in self.vertices:
            r, c = self.shapes[v]
            off = self.offsets[v]
            comps[v] = Matrix(
                field, [[vec[off + i * c + j] for j in range(c)] for i in range(r)], r, c
            )
        return comps


def _intertwiner_matrix(M: Representation, N: Representation, layout: _HomLayout) -> Matrix:
    """Constraint matrix of H_t A_M - A_N H_s = 0 over all arrows."""
    f = M.field
    rows = []
    for a in M.window.arrows:
        s, t = a.source, a.target
        AM, AN = M.mat(a), N.mat(a)
        for i in range(N.dim(t)):
            for j in range(M.dim(s)):
                row = [f.zero] * layout.size
                for k in range(M.dim(t)):
                    row[layout.index(t, i, k)] = f.add(
                        row[layout.index(t, i, k)], AM.entries[k][j]
                    )
                for l in range(N.dim(s)):
                    row[layout.index(s, l, j)] = f.sub(
                        row[layout.index(s, l, j)], AN.entries[i][l]
                    )
                rows.append(row)
    return Matrix(f, rows, len(rows), layout.size)


def hom_basis(M: Representation, N: Representation) -> list:
    """A basis of Hom(M, N) as a list of morphisms."""
    M, N = common_window(M, N)
    layout = _HomLayout(M.window, lambda v: N.dim(v), lambda v: M.dim(v))
    if layout.size == 0:
        return []
    C = _intertwiner_matrix(M, N, layout)
    K = kernel_basis(C)
    out = []
    for j in range(K.cols):
        comps = layout.unflatten(M.field, K.col(j))
        out.append(Morphism(M, N, comps))
    return out


def hom_dim(M: Representation, N: Representation) -> int:
    return len(hom_basis(M, N))


_ISO_SEARCH_CAP = 10**6


def is_isomorphic(M: Representation, N: Representation):
    """An isomorphism M -> N, or None if provably not isomorphic.

    Searches a deterministic grid of coefficient combinations of the hom
    basis.  Over the rationals the grid {0..total_dim} per coordinate is a
    complete decision procedure (a nonzero product-of-determinants
    polynomial cannot vanish on a grid larger than its degree); over F_p
    the full p^k grid is enumerated.  If the grid exceeds the search cap,
    :class:`UndecidedIsomorphism` is raised, which is distinct from a
    negative answer.
    """
    M, N = common_window(M, N)
    if M.dim_vector != N.dim_vector:
        return None
    if M.total_dim == 0:
        return Morphism(M, N, {})
    basis = hom_basis(M, N)
    if not basis:
        return None
    k = len(basis)
    f = M.field
    if f.p is None:
        coeff_pool = [f.from_int(n) for n in range(M.total_dim + 1)]
    else:
        coeff_pool = [f.from_int(n) for n in range(f.p)]
    if len(coeff_pool) ** k > _ISO_SEARCH_CAP:
        raise UndecidedIsomorphism(
            f"search space {len(coeff_pool)}^{k} exceeds cap {_ISO_SEARCH_CAP}"
        )
    # Cheap first pass: single basis elements are usually enough.
    for h in basis:
        if h.is_isomorphism():
            return h
    for coeffs in itertools.product(coeff_pool, repeat=k):
        if all(f.is_zero(c) for c in coeffs):
            continue
        h = basis[0].scale(coeffs[0])
        for c, b in zip(coeffs[1:], basis[1:]):
            h = h.add(b.scale(c))
        if h.is_isomorphism():
            return h
    return None


def direct_sum(M: Representation, N: Representation) -> Representation:
    M, N = common_window(M, N)
    f = M.field
    dims = {v: M.dim(v) + N.dim(v) for v in M.window.vertices}
    mats = {}
    for a in M.window.arrows:
        A, B = M.mat(a), N.mat(a)
        r, c = A.rows + B.rows, A.cols + B.cols
        blk = [[f.zero] * c for _ in range(r)]
        for i in range(A.rows):
            for j in range(A.cols):
                blk[i][j] = A.entries[i][j]
        for i in range(B.rows):
            for j in range(B.cols):
                blk[A.rows + i][A.cols + j] = B.entries[i][j]
        mats[a] = Matrix(f, blk, r, c)
    return Representation(M.window, f, dims, mats)


@dataclass
class EndAlgebra:
    """End(M) on a hom basis, with multiplication structure constants.

    ``table[i][j]`` is the coordinate vector of ``basis[i] o basis[j]``.
    """

    basis: list
    table: list


def end_algebra(M: Representation) -> EndAlgebra:
    basis = hom_basis(M, M)
    n = len(basis)
    if n == 0:
        return EndAlgebra([], [])
    Mw = basis[0].source
    layout = _HomLayout(Mw.window, lambda v: Mw.dim(v), lambda v: Mw.dim(v))
    f = Mw.field
    flat = Matrix.from_columns(
        f, [layout.flatten(f, b.comps) for b in basis], layout.size
    )
    table = []
    for bi in basis:
        row = []
        for bj in basis:
            comp = bi.compose(bj)
            target = Matrix.column(f, layout.flatten(f, comp.comps))
            sol = solve(flat, target)
            assert sol is not None, "composite fell outside the hom space"
            row.append([sol.particular.entries[i][0] for i in range(n)])
        table.append(row)
    return EndAlgebra(basis, table)


def is_indecomposable(M: Representation) -> bool:
    """True iff End(M)/rad is 1-dimensional, via the trace bilinear form.

    Valid in characteristic 0 and for p > dim End(M); otherwise raises
    :class:`UndecidedIndecomposability`.
    """
    alg = end_algebra(M)
    n = len(alg.basis)
    if n == 0:
        return False  # the zero module
    p = M.field.characteristic
    if p and p <= n:
        raise UndecidedIndecomposability(
            f"trace-form radical needs characteristic 0 or p > dim End = {n}"
        )
    f = M.field
    # L[i] is the matrix of left multiplication by basis[i] on End(M).
    left = [
        Matrix(f, [[alg.table[i][j][m] for j in range(n)] for m in range(n)], n, n)
        for i in range(n)
    ]
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = left[i] @ left[j]
            tr = f.zero
            for d in range(n):
                tr = f.add(tr, prod.entries[d][d])
            row.append(tr)
        gram.append(row)
    return rank(Matrix(f, gram, n, n)) == 1
