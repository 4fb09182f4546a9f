"""Finite windows of the repetitive 2-Kronecker quiver with its relation ideal.

Vertices come in two layers indexed by an integer z: ``1@z`` and ``2@z``.
Arrows per layer:

    a{z}, b{z} : 1@z -> 2@z
    A{z}, B{z} : 2@z -> 1@{z-1}

The relation ideal consists of two commutativity families

    A{z} o a{z} = B{z} o b{z}          (path 1@z -> 1@{z-1})
    a{z-1} o A{z} = b{z-1} o B{z}      (path 2@z -> 2@{z-1})

and the four mixed zero families

    A{z} o b{z} = B{z} o a{z} = a{z-1} o B{z} = b{z-1} o A{z} = 0.

Every composable length-2 path therefore appears in exactly one relation.
A window [z_min, z_max] holds all vertices in range, all arrows with both
endpoints in range, and every relation whose arrows all lie in the window.
Windows are immutable; growing a window never changes existing identities.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True, order=True)
class Vertex:
    layer: int  # 1 or 2
    z: int

    def __post_init__(self):
        if self.layer not in (1, 2):
            raise ValueError(f"layer must be 1 or 2, got {self.layer}")

    @property
    def name(self) -> str:
        return f"{self.layer}@{self.z}"

    def shifted(self, k: int) -> "Vertex":
        """Relabel z by z - k."""
        return Vertex(self.layer, self.z - k)

    def dual(self) -> "Vertex":
        """The fixed self-relabeling of the opposite quiver onto the quiver."""
        return Vertex(3 - self.layer, -self.z)


# Arrow kinds: 'a', 'b' are the downward Kronecker pair 1@z -> 2@z;
# 'A', 'B' are the connecting pair 2@z -> 1@{z-1}.
_DOWN = ("a", "b")
_STAR = ("A", "B")


@dataclass(frozen=True, order=True)
class Arrow:
    kind: str  # one of 'a', 'b', 'A', 'B'
    z: int

    def __post_init__(self):
        if self.kind not in ("a", "b", "A", "B"):
            raise ValueError(f"unknown arrow kind {self.kind!r}")

    @property
    def source(self) -> Vertex:
        return Vertex(1, self.z) if self.kind in _DOWN else Vertex(2, self.z)

    @property
    def target(self) -> Vertex:
        return Vertex(2, self.z) if self.kind in _DOWN else Vertex(1, self.z - 1)

    @property
    def name(self) -> str:
        return f"{self.kind}{self.z}"

    def shifted(self, k: int) -> "Arrow":
        return Arrow(self.kind, self.z - k)

    def dual(self) -> "Arrow":
        """Opposite-quiver relabeling: a{z} <-> a{-z}, A{z} <-> A{-z+1}."""
        if self.kind in _DOWN:
            return Arrow(self.kind, -self.z)
        return Arrow(self.kind, -self.z + 1)


_VERTEX_RE = re.compile(r"^([12])@(-?\d+)$")
_ARROW_RE = re.compile(r"^([abAB])(-?\d+)$")


def parse_vertex(text: str) -> Vertex:
    m = _VERTEX_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad vertex {text!r} (expected e.g. '1@0' or '2@-3')")
    return Vertex(int(m.group(1)), int(m.group(2)))


def parse_arrow(text: str) -> Arrow:
    m = _ARROW_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad arrow {text!r} (expected e.g. 'a0' or 'B-1')")
    return Arrow(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class Relation:
    """A length-2 relation: sum of signed composites ``outer o inner``."""

    kind: str  # "commutativity" | "zero"
    terms: tuple  # ((sign, (inner: Arrow, outer: Arrow)), ...)

    def pairs(self):
        return [pair for _, pair in self.terms]


@dataclass(frozen=True)
class QuiverWindow:
    z_min: int
    z_max: int

    def __post_init__(self):
        if self.z_min > self.z_max:
            raise ValueError(f"empty window [{self.z_min}, {self.z_max}]")

    @cached_property
    def vertices(self) -> tuple:
        return tuple(
            Vertex(layer, z)
            for z in range(self.z_min, self.z_max + 1)
            for layer in (1, 2)
        )

    @cached_property
    def arrows(self) -> tuple:
        out = []
        for z in range(self.z_min, self.z_max + 1):
            for kind in _DOWN:
                out.append(Arrow(kind, z))
        for z in range(self.z_min + 1, self.z_max + 1):
            for kind in _STAR:
                out.append(Arrow(kind, z))
        return tuple(out)

    @cached_property
    def relations(self) -> tuple:
        rels = []
        for z in range(self.z_min + 1, self.z_max + 1):
            a, b = Arrow("a", z), Arrow("b", z)
            A, B = Arrow("A", z), Arrow("B", z)
            a1, b1 = Arrow("a", z - 1), Arrow("b", z - 1)
            rels.append(Relation("commutativity", ((1, (a, A)), (-1, (b, B)))))
            rels.append(Relation("commutativity", ((1, (A, a1)), (-1, (B, b1)))))
            rels.append(Relation("zero", ((1, (b, A)),)))
            rels.append(Relation("zero", ((1, (a, B)),)))
            rels.append(Relation("zero", ((1, (B, a1)),)))
            rels.append(Relation("zero", ((1, (A, b1)),)))
        return tuple(rels)

    def contains_vertex(self, v: Vertex) -> bool:
        return self.z_min <= v.z <= self.z_max

    def contains_arrow(self, a: Arrow) -> bool:
        return self.contains_vertex(a.source) and self.contains_vertex(a.target)

    def merge(self, other: "QuiverWindow") -> "QuiverWindow":
        return QuiverWindow(min(self.z_min, other.z_min), max(self.z_max, other.z_max))

    def grown(self, below: int = 0, above: int = 0) -> "QuiverWindow":
        return QuiverWindow(self.z_min - below, self.z_max + above)

    def dual(self) -> "QuiverWindow":
        return QuiverWindow(-self.z_max, -self.z_min)

    def shifted(self, k: int) -> "QuiverWindow":
        return QuiverWindow(self.z_min - k, self.z_max - k)


def make_window(z_min: int, z_max: int) -> QuiverWindow:
    return QuiverWindow(z_min, z_max)


def paths_of_length_2(w: QuiverWindow):
    """All ordered composable pairs (inner, outer), composite ``outer o inner``."""
    by_source = {}
    for a in w.arrows:
        by_source.setdefault(a.source, []).append(a)
    pairs = []
    for inner in w.arrows:
        for outer in by_source.get(inner.target, ()):
            pairs.append((inner, outer))
    return pairs


def forbidden_pairs(w: QuiverWindow) -> frozenset:
    """Composable pairs (inner, outer) killed by or tied into a relation.

    For this ideal that is every composable pair; kept explicit so string
    validity is a relation scan rather than a hard-coded alternation rule.
    """
    out = set()
    for rel in w.relations:
        out.update(rel.pairs())
    return frozenset(out)
