"""Dense exact linear algebra over a Field (or over k[t]/(t^n) for the ring ops).

Matrices are immutable, dense, row-major.  Rank, kernel and solving are
restricted to field entries; truncated-ring systems are handled order by
order in the deformation layer, never here.  Pivoting is deterministic
(first nonzero entry in column order) so kernel bases are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import UnsupportedRingError


class Matrix:
    """A rows x cols matrix with entries in a Field or TruncatedRing.

    Zero-row and zero-column matrices are legal and represent maps to or
    from the zero space.
    """

    __slots__ = ("domain", "rows", "cols", "entries")

    def __init__(self, domain, entries, rows=None, cols=None):
        entries = tuple(tuple(r) for r in entries)
        if rows is None:
            rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("ragged or mis-shaped entry list")
        self.domain = domain
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, domain, rows, cols):
        z = domain.zero
        return cls(domain, [[z] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, domain, n):
        z, o = domain.zero, domain.one
        return cls(domain, [[o if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_ints(cls, domain, entries):
        return cls(domain, [[domain.from_int(x) for x in row] for row in entries])

    @classmethod
    def column(cls, domain, values):
        return cls(domain, [[v] for v in values], len(values), 1)

    @classmethod
    def from_columns(cls, domain, columns, rows):
        """Build a rows x len(columns) matrix from column vectors (lists)."""
        cols = len(columns)
        return cls(
            domain,
            [[columns[j][i] for j in range(cols)] for i in range(rows)],
            rows,
            cols,
        )

    # -- shape and access --------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def col(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def is_zero(self) -> bool:
        d = self.domain
        return all(d.is_zero(x) for row in self.entries for x in row)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.domain == other.domain
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.domain, self.entries))

    def __repr__(self):
        d = self.domain
        body = "; ".join(" ".join(d.format(x) for x in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    # -- arithmetic --------------------------------------------------------

    def _same_domain(self, other):
        if self.domain != other.domain:
            raise ValueError("matrices over different domains")

    def __add__(self, other):
        self._same_domain(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        d = self.domain
        return Matrix(
            d,
            [
                [d.add(a, b) for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
            self.rows,
            self.cols,
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        d = self.domain
        return Matrix(d, [[d.neg(x) for x in row] for row in self.entries], self.rows, self.cols)

    def __matmul__(self, other):
        self._same_domain(other)
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch in product: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        d = self.domain
        z = d.zero
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if d.is_zero(a):
                        continue
                    acc = d.add(acc, d.mul(a, other.entries[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix(d, out, self.rows, other.cols)

    def scale(self, c):
        d = self.domain
        return Matrix(d, [[d.mul(c, x) for x in row] for row in self.entries], self.rows, self.cols)

    def transpose(self):
        return Matrix(
            self.domain,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.cols,
            self.rows,
        )

    def hstack(self, other):
        self._same_domain(other)
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Matrix(
            self.domain,
            [r1 + r2 for r1, r2 in zip(self.entries, other.entries)],
            self.rows,
            self.cols + other.cols,
        )

    def map_entries(self, new_domain, fn):
        return Matrix(new_domain, [[fn(x) for x in row] for row in self.entries], self.rows, self.cols)


def _require_field(A: Matrix):
    if not A.domain.is_field:
        raise UnsupportedRingError(
            "rank/kernel/solve require field entries; k[t]/(t^n) systems with "
            "n >= 2 are handled order by order elsewhere"
        )


def _rref(rows, field, width):
    """Row-reduce in place; return pivot column list.  Deterministic pivots."""
    pivots = []
    r = 0
    for c in range(width):
        pr = None
        for i in range(r, len(rows)):
            if not field.is_zero(rows[i][c]):
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(A: Matrix) -> int:
    _require_field(A)
    rows = [list(r) for r in A.entries]
    return len(_rref(rows, A.domain, A.cols))


def kernel_basis(A: Matrix) -> Matrix:
    """Columns form a basis of ker A; column count is cols - rank."""
    _require_field(A)
    f = A.domain
    rows = [list(r) for r in A.entries]
    pivots = _rref(rows, f, A.cols)
    pivot_set = set(pivots)
    free = [c for c in range(A.cols) if c not in pivot_set]
    columns = []
    for fc in free:
        v = [f.zero] * A.cols
        v[fc] = f.one
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(rows[r][fc])
        columns.append(v)
    return Matrix.from_columns(f, columns, A.cols)


@dataclass(frozen=True)
class Solution:
    """One solution of A X = B together with ker A (the full affine set)."""

    particular: Matrix
    kernel: Matrix


def solve(A: Matrix, B: Matrix) -> Solution | None:
    """Solve A X = B exactly; None if inconsistent."""
    _require_field(A)
    if A.domain != B.domain:
        raise ValueError("matrices over different domains")
    if A.rows != B.rows:
        raise ValueError(f"shape mismatch: A has {A.rows} rows, B has {B.rows}")
    f = A.domain
    aug = [list(ra) + list(rb) for ra, rb in zip(A.entries, B.entries)]
    if not aug:
        aug = []
    pivots = _rref(aug, f, A.cols) if aug else []
    # Inconsistent when a zero row of the A-part meets a nonzero B-part.
    for i in range(len(pivots), A.rows):
        if any(not f.is_zero(aug[i][c]) for c in range(A.cols, A.cols + B.cols)):
            return None
    X = [[f.zero] * B.cols for _ in range(A.cols)]
    for r, pc in enumerate(pivots):
        for j in range(B.cols):
            X[pc][j] = aug[r][A.cols + j]
    return Solution(Matrix(f, X, A.cols, B.cols), kernel_basis(A))
