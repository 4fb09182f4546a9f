"""Exact coefficient arithmetic: the rationals, prime fields, and k[t]/(t^n).

Every computation in the package is exact; there is no floating point
anywhere.  Rational scalars are ``fractions.Fraction``, prime-field scalars
are canonical integer representatives ``0..p-1``, and truncated-ring
elements are coefficient tuples of length ``n`` (lowest degree first).

Scalars are plain Python values; the *domain* object (a :class:`Field` or a
:class:`TruncatedRing`) carries the arithmetic.  All values are immutable.
"""

from __future__ import annotations

from fractions import Fraction


class UnsupportedRingError(TypeError):
    """An operation that needs a field was asked to work over k[t]/(t^n), n >= 2."""


class MixedRingError(ValueError):
    """Operands belong to different coefficient rings."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """An exact coefficient field: the rationals (``p is None``) or F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    # -- structure ---------------------------------------------------------

    @property
    def is_field(self) -> bool:
        return True

    @property
    def characteristic(self) -> int:
        return self.p or 0

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def from_int(self, n: int):
        return n % self.p if self.p else Fraction(n)

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    # -- text I/O ----------------------------------------------------------

    def format(self, a) -> str:
        if self.p:
            return str(a % self.p)
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def parse(self, s: str):
        s = s.strip()
        if self.p:
            return int(s) % self.p
        return Fraction(s)

    @property
    def name(self) -> str:
        return f"F{self.p}" if self.p else "Q"

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"Field({self.name})"


RATIONALS = Field()


def field_from_name(name: str) -> Field:
    """Parse ``"Q"`` or ``"F<p>"`` into a :class:`Field`."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return Field()
    if name.startswith("F"):
        return Field(int(name[1:]))
    raise ValueError(f"unknown field {name!r} (expected 'Q' or 'F<p>')")


class TruncatedRing:
    """The ring k[t]/(t^n) over a base :class:`Field`.

    Elements are tuples of ``order`` base-field coefficients, lowest degree
    first.  Order 1 is the base field itself (and is treated as a field by
    the linear-algebra kernel); order 2 is the dual numbers.
    """

    __slots__ = ("base", "order")

    def __init__(self, base: Field, order: int):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.base = base
        self.order = order

    @property
    def is_field(self) -> bool:
        return self.order == 1

    @property
    def zero(self):
        return (self.base.zero,) * self.order

    @property
    def one(self):
        return (self.base.one,) + (self.base.zero,) * (self.order - 1)

    @property
    def t(self):
        if self.order < 2:
            raise ValueError("t = 0 in a ring of order 1")
        e = [self.base.zero] * self.order
        e[1] = self.base.one
        return tuple(e)

    def from_int(self, n: int):
        return (self.base.from_int(n),) + (self.base.zero,) * (self.order - 1)

    def from_base(self, a):
        return (a,) + (self.base.zero,) * (self.order - 1)

    def _check(self, a):
        if len(a) != self.order:
            raise MixedRingError(
                f"element of order {len(a)} used in ring of order {self.order}"
            )

    def add(self, a, b):
        self._check(a)
        self._check(b)
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        self._check(a)
        self._check(b)
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        self._check(a)
        self._check(b)
        out = [self.base.zero] * self.order
        for i, x in enumerate(a):
            if self.base.is_zero(x):
                continue
            for j in range(self.order - i):
                out[i + j] = self.base.add(out[i + j], self.base.mul(x, b[j]))
        return tuple(out)

    def neg(self, a):
        self._check(a)
        return tuple(self.base.neg(x) for x in a)

    def inv(self, a):
        self._check(a)
        if self.base.is_zero(a[0]):
            raise ZeroDivisionError("non-unit in k[t]/(t^n)")
        # Newton-style back substitution against a * b = 1.
        b = [self.base.inv(a[0])] + [self.base.zero] * (self.order - 1)
        for j in range(1, self.order):
            acc = self.base.zero
            for i in range(1, j + 1):
                acc = self.base.add(acc, self.base.mul(a[i], b[j - i]))
            b[j] = self.base.neg(self.base.mul(b[0], acc))
        return tuple(b)

    def is_zero(self, a) -> bool:
        self._check(a)
        return all(self.base.is_zero(x) for x in a)

    def reduce_mod_t(self, a, k: int):
        """Image of ``a`` under k[t]/(t^n) -> k[t]/(t^k), k <= n."""
        self._check(a)
        if not 1 <= k <= self.order:
            raise ValueError(f"cannot reduce order {self.order} to order {k}")
        return a[:k]

    def constant_term(self, a):
        self._check(a)
        return a[0]

    def format(self, a) -> str:
        self._check(a)
        return "[" + ", ".join(self.base.format(x) for x in a) + "]"

    def parse(self, s: str):
        s = s.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"bad truncated-ring element {s!r}")
        coeffs = [self.base.parse(tok) for tok in s[1:-1].split(",") if tok.strip()]
        if len(coeffs) != self.order:
            raise MixedRingError(f"expected {self.order} coefficients, got {len(coeffs)}")
        return tuple(coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedRing)
            and self.base == other.base
            and self.order == other.order
        )

    def __hash__(self):
        return hash(("TruncatedRing", self.base, self.order))

    def __repr__(self):
        return f"TruncatedRing({self.base.name}, order={self.order})"


def trunc_add(ring: TruncatedRing, a, b):
    return ring.add(a, b)


def trunc_mul(ring: TruncatedRing, a, b):
    return ring.mul(a, b)


def reduce_mod_t(ring: TruncatedRing, a, k: int):
    return ring.reduce_mod_t(a, k)
