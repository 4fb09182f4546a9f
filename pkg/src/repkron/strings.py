"""String words, string/simple modules, enumeration, and orbit graphs.

A string word is a reduced walk of arrows and formal inverses avoiding the
relation ideal.  Because every composable length-2 path here belongs to a
relation, valid words strictly alternate direction, but validity is checked
by scanning the relation set rather than hard-coding that consequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .quiver import QuiverWindow, Vertex, forbidden_pairs, parse_arrow, parse_vertex
from .representation import (
    Matrix,
    Representation,
    UndecidedIsomorphism,
    is_isomorphic,
)


class StringParseError(ValueError):
    """Base class for string-word errors; subclasses pinpoint the cause."""


class BadTokenError(StringParseError):
    pass


class NonComposableError(StringParseError):
    pass


class NotReducedError(StringParseError):
    pass


class RelationViolationError(StringParseError):
    pass


@dataclass(frozen=True, order=True)
class Letter:
    arrow: Arrow
    inverted: bool = False

    @property
    def start(self) -> Vertex:
        return self.arrow.target if self.inverted else self.arrow.source

    @property
    def end(self) -> Vertex:
        return self.arrow.source if self.inverted else self.arrow.target

    def inverse(self) -> "Letter":
        return Letter(self.arrow, not self.inverted)

    @property
    def token(self) -> str:
        return self.arrow.name + ("^-1" if self.inverted else "")


def _relation_scan(letters):
    """Raise if any subword (or its inverse) is half of a relation."""
    if len(letters) < 2:
        return
    zs = [l.arrow.z for l in letters]
    window = QuiverWindow(min(zs) - 1, max(zs) + 1)
    bad = forbidden_pairs(window)
    for prev, cur in zip(letters, letters[1:]):
        if not prev.inverted and not cur.inverted:
            pair = (prev.arrow, cur.arrow)
        elif prev.inverted and cur.inverted:
            pair = (cur.arrow, prev.arrow)  # the inverse subword, read directly
        else:
            continue
        if pair in bad:
            raise RelationViolationError(
                f"subword {prev.token} {cur.token} lies in the relation ideal"
            )


@dataclass(frozen=True)
class StringWord:
    """A reduced, relation-avoiding walk; trivial words carry a basepoint."""

    letters: tuple = ()
    basepoint: Vertex | None = None

    def __post_init__(self):
        if not self.letters:
            if self.basepoint is None:
                raise StringParseError("trivial word needs a basepoint vertex")
            return
        for prev, cur in zip(self.letters, self.letters[1:]):
            if prev.end != cur.start:
                raise NonComposableError(
                    f"{cur.token} does not continue the walk at {prev.end.name}"
                )
            if prev.arrow == cur.arrow and prev.inverted != cur.inverted:
                raise NotReducedError(
                    f"{prev.token} immediately followed by its inverse"
                )
        _relation_scan(self.letters)

    def __len__(self):
        return len(self.letters)

    @property
    def walk_vertices(self) -> tuple:
        if not self.letters:
            return (self.basepoint,)
        return (self.letters[0].start,) + tuple(l.end for l in self.letters)

    @property
    def tokens(self) -> tuple:
        if not self.letters:
            return (self.basepoint.name,)
        return tuple(l.token for l in self.letters)

    @property
    def text(self) -> str:
        return " ".join(self.tokens)

    def reverse_inverse(self) -> "StringWord":
        if not self.letters:
            return self
        return StringWord(tuple(l.inverse() for l in reversed(self.letters)))

    def canonical(self) -> "StringWord":
        """Lexicographically least of the word and its formal inverse."""
        other = self.reverse_inverse()
        return self if self.tokens <= other.tokens else other


def parse_string(text: str) -> StringWord:
    """Parse a word in the arrow grammar, or a lone vertex for a trivial word."""
    text = text.strip()
    if not text:
        raise BadTokenError("empty string word")
    if "@" in text and " " not in text:
        try:
            return StringWord((), parse_vertex(text))
        except ValueError as e:
            raise BadTokenError(str(e)) from None
    letters = []
    for tok in text.split():
        inverted = tok.endswith("^-1")
        name = tok[:-3] if inverted else tok
        try:
            arrow = parse_arrow(name)
        except ValueError:
            raise BadTokenError(f"unparseable token {tok!r}") from None
        letters.append(Letter(arrow, inverted))
    return StringWord(tuple(letters))


def string_module(w: StringWord, field) -> Representation:
    """The string module of a word: one basis line per walk vertex,
    identity entries along the letters."""
    verts = w.walk_vertices
    zs = [v.z for v in verts]
    window = QuiverWindow(min(zs), max(zs))
    dims = {}
    slot = []  # per walk position: index inside its vertex
    for v in verts:
        slot.append(dims.get(v, 0))
        dims[v] = dims.get(v, 0) + 1
    f = field
    entries = {
        a: [[f.zero] * dims.get(a.source, 0) for _ in range(dims.get(a.target, 0))]
        for a in window.arrows
    }
    for pos, letter in enumerate(w.letters):
        a = letter.arrow
        if letter.inverted:
            src_pos, tgt_pos = pos + 1, pos
        else:
            src_pos, tgt_pos = pos, pos + 1
        entries[a][slot[tgt_pos]][slot[src_pos]] = f.one
    mats = {
        a: Matrix(f, rows, dims.get(a.target, 0), dims.get(a.source, 0))
        for a, rows in entries.items()
    }
    return Representation(window, f, dims, mats)


def simple(v: Vertex, field) -> Representation:
    return Representation(QuiverWindow(v.z, v.z), field, {v: 1})


def enumerate_strings(window: QuiverWindow, max_len: int):
    """All valid words of length <= max_len supported in the window, one
    canonical representative per inverse-pair, in deterministic order."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    bad = forbidden_pairs(window)
    seen = {}
    for v in window.vertices:
        w = StringWord((), v)
        seen[w.tokens] = w
    frontier = [()]
    for _ in range(max_len):
        new_frontier = []
        for letters in frontier:
            candidates = []
            if not letters:
                for a in window.arrows:
                    candidates.append((None, Letter(a, False)))
                    candidates.append((None, Letter(a, True)))
            else:
                end = letters[-1].end
                last = letters[-1]
                for a in window.arrows:
                    for inv in (False, True):
                        cand = Letter(a, inv)
                        if cand.start != end:
                            continue
                        if cand.arrow == last.arrow and cand.inverted != last.inverted:
                            continue  # not reduced
                        if not last.inverted and not inv:
                            if (last.arrow, a) in bad:
                                continue
                        elif last.inverted and inv:
                            if (a, last.arrow) in bad:
                                continue
                        candidates.append((last, cand))
            for _, cand in candidates:
                if not window.contains_vertex(cand.start) or not window.contains_vertex(cand.end):
                    continue
                ext = letters + (cand,)
                word = StringWord(ext).canonical()
                seen.setdefault(word.tokens, word)
                new_frontier.append(ext)
        frontier = new_frontier
    return sorted(seen.values(), key=lambda w: (len(w), w.tokens))


@dataclass
class OrbitNode:
    id: int
    rep: Representation
    label: str
    undecided: bool = False


@dataclass
class OrbitGraph:
    nodes: list = dc_field(default_factory=list)
    edges: list = dc_field(default_factory=list)  # (src id, dst id, op name)

    def to_json(self) -> dict:
        return {
            "nodes": [
                {
                    "id": n.id,
                    "label": n.label,
                    "dims": {v.name: d for v, d in n.rep.dim_vector.items()},
                    "undecided": n.undecided,
                }
                for n in self.nodes
            ],
            "edges": [{"from": s, "to": t, "op": op} for s, t, op in self.edges],
        }


def _dim_vector_label(M: Representation) -> str:
    if M.is_zero():
        return "0"
    return ",".join(f"{v.name}:{d}" for v, d in M.dim_vector.items())


def string_label(M: Representation) -> str:
    """Canonical word labeling M when M is a small string module, else the
    dimension vector."""
    n = M.total_dim
    if n == 0 or n > 8:
        return _dim_vector_label(M)
    Mt = M.trimmed()
    for w in enumerate_strings(Mt.window, n - 1):
        if len(w) != n - 1:
            continue
        try:
            if is_isomorphic(string_module(w, M.field), Mt) is not None:
                return w.text
        except UndecidedIsomorphism:
            continue
    return _dim_vector_label(M)


_ORBIT_OPS = ("omega", "omega_inv", "nu", "tau")


def orbit_graph(M: Representation, radius: int) -> OrbitGraph:
    """Iso-classes reached from M by syzygy, cosyzygy, layer shift and AR
    translate, up to the given radius; undecided isomorphisms become
    flagged separate nodes."""
    from .frobenius import ar_translate, cosyzygy, is_projective, nakayama_shift, syzygy

    graph = OrbitGraph()
    start = M.trimmed()
    graph.nodes.append(OrbitNode(0, start, string_label(start)))
    frontier = [0]
    for _ in range(radius):
        next_frontier = []
        for nid in frontier:
            rep = graph.nodes[nid].rep
            for op in _ORBIT_OPS:
                if op == "omega":
                    out = syzygy(rep)
                elif op == "omega_inv":
                    out = cosyzygy(rep)
                elif op == "nu":
                    out = nakayama_shift(rep, 1)
                else:
                    if is_projective(rep):
                        continue
                    import warnings

                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore")
                        out = ar_translate(rep)
                out = out.trimmed()
                if out.is_zero():
                    continue
                target_id = None
                undecided = False
                for node in graph.nodes:
                    if node.rep.dim_vector != out.dim_vector:
                        continue
                    try:
                        if is_isomorphic(node.rep, out) is not None:
                            target_id = node.id
                            break
                    except UndecidedIsomorphism:
                        undecided = True
                if target_id is None:
                    target_id = len(graph.nodes)
                    graph.nodes.append(
                        OrbitNode(target_id, out, string_label(out), undecided)
                    )
                    next_frontier.append(target_id)
                edge = (nid, target_id, op)
                if edge not in graph.edges:
                    graph.edges.append(edge)
        frontier = next_frontier
    return graph
