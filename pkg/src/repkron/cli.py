"""Command-line interface.

Module arguments are *module specs*: either a string word in the arrow
grammar (``"a0"``, ``"a0 b0^-1"``), a lone vertex for a simple module
(``"1@0"``), or ``@file.json`` to load a serialized representation.

Exit codes: 0 success, 1 a check failed (invalid module, inconsistent
invariants), 2 bad input.  With ``--json`` all output, including errors,
is a single JSON document; errors have the shape
``{"error": {"kind": ..., "detail": ...}}``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .deformation import classify_versal_ring, extend_lift, first_order_lifts, lift_from_tangent
from .frobenius import (
    ar_translate,
    cosyzygy,
    nakayama_shift,
    stable_hom_dim,
    syzygy,
    ext1_dim,
)
from .quiver import QuiverWindow
from .representation import (
    Representation,
    UndecidedIsomorphism,
    hom_dim,
    is_isomorphic,
    validate,
)
from .scalars import TruncatedRing, field_from_name
from .strings import enumerate_strings, orbit_graph, parse_string, string_label, string_module

_OP_SYMBOLS = {"omega": "Ω", "omega_inv": "Ω⁻¹", "nu": "ν", "tau": "τ"}


class CliError(Exception):
    def __init__(self, kind: str, detail: str, code: int = 2):
        super().__init__(detail)
        self.kind = kind
        self.detail = detail
        self.code = code


def _load_module(spec: str, field) -> Representation:
    if spec.startswith("@"):
        try:
            with open(spec[1:]) as fh:
                return Representation.from_json(json.load(fh))
        except (OSError, ValueError, KeyError) as e:
            raise CliError("bad-module-file", f"{spec[1:]}: {e}") from None
    try:
        word = parse_string(spec)
    except ValueError as e:
        raise CliError("bad-string", str(e)) from None
    return string_module(word, field)


def _parse_window(text: str) -> QuiverWindow:
    try:
        lo, hi = text.split(":")
        return QuiverWindow(int(lo), int(hi))
    except ValueError as e:
        raise CliError("bad-window", f"{text!r}: {e}") from None


def emit_dot(graph) -> str:
    lines = ["digraph orbit {"]
    for n in graph.nodes:
        shape = ', style="dashed"' if n.undecided else ""
        lines.append(f'  n{n.id} [label="{n.label}"{shape}];')
    for s, t, op in graph.edges:
        lines.append(f'  n{s} -> n{t} [label="{_OP_SYMBOLS[op]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _module_text(M: Representation) -> str:
    M = M.trimmed()
    lines = [f"field: {M.field.name}", f"label: {string_label(M)}"]
    lines.append("dims: " + (", ".join(f"{v.name}:{d}" for v, d in M.dim_vector.items()) or "0"))
    for a in M.window.arrows:
        m = M.mat(a)
        if not m.is_zero():
            body = "; ".join(" ".join(M.field.format(x) for x in row) for row in m.entries)
            lines.append(f"{a.name}: [{body}]")
    return "\n".join(lines) + "\n"


def _write(args, text: str):
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _output(args, data: dict, text: str):
    _write(args, json.dumps(data, indent=2, sort_keys=True) + "\n" if args.json else text)


def _module_result(args, M: Representation) -> int:
    _output(args, M.trimmed().to_json(), _module_text(M))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="repkron", description=__doc__.split("\n\n")[0])
    p.add_argument("--field", default="Q", help="coefficient field: Q or F<p> (default Q)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--emit", metavar="FILE", help="write output to FILE instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def mod_cmd(name, help_, two=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("module", help="module spec: string word, vertex, or @file.json")
        if two:
            sp.add_argument("other", help="second module spec")
        return sp

    mod_cmd("show", "print a module's dimensions and matrices")
    mod_cmd("validate", "check the relations; exit 1 on violation")
    mod_cmd("hom", "dim Hom and isomorphism verdict for two modules", two=True)
    mod_cmd("stablehom", "stable Hom dimension for two modules", two=True)
    mod_cmd("ext", "dim Ext^1 for two modules", two=True)
    mod_cmd("omega", "the syzygy")
    mod_cmd("coomega", "the cosyzygy")
    sp = mod_cmd("nu", "the layer shift")
    sp.add_argument("-k", type=int, default=1, help="shift amount (default 1)")
    mod_cmd("tau", "the AR translate")
    sp = mod_cmd("classify", "versal deformation ring dichotomy")
    sp.add_argument("--order", type=int, default=6, help="lifting test order (default 6)")
    sp = mod_cmd("lift", "first-order lifts and order-by-order extension")
    sp.add_argument("--order", type=int, default=6, help="target order (default 6)")
    sp = mod_cmd("orbit", "orbit graph under Ω, Ω⁻¹, ν, τ")
    sp.add_argument("--radius", type=int, default=2, help="search radius (default 2)")
    sp.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of text")
    sp = sub.add_parser("enumerate", help="all string words in a window")
    sp.add_argument("--window", required=True, metavar="ZMIN:ZMAX")
    sp.add_argument("--max-len", type=int, default=4)
    return p


def _run(args) -> int:
    field = field_from_name(args.field)
    cmd = args.command
    if cmd == "enumerate":
        words = enumerate_strings(_parse_window(args.window), args.max_len)
        _output(
            args,
            {"words": [w.text for w in words]},
            "".join(w.text + "\n" for w in words),
        )
        return 0

    M = _load_module(args.module, field)
    if cmd == "show":
        return _module_result(args, M)
    if cmd == "validate":
        bad = validate(M)
        _output(args, {"valid": not bad, "violations": bad}, "".join(v + "\n" for v in bad) or "ok\n")
        return 1 if bad else 0
    if cmd in ("hom", "stablehom", "ext"):
        N = _load_module(args.other, field)
        if cmd == "hom":
            d = hom_dim(M, N)
            try:
                iso = is_isomorphic(M, N) is not None
            except UndecidedIsomorphism:
                iso = "undecided"
            _output(args, {"hom_dim": d, "isomorphic": iso}, f"hom_dim: {d}\nisomorphic: {iso}\n")
        elif cmd == "stablehom":
            d = stable_hom_dim(M, N)
            _output(args, {"stable_hom_dim": d}, f"stable_hom_dim: {d}\n")
        else:
            d = ext1_dim(M, N)
            _output(args, {"ext1_dim": d}, f"ext1_dim: {d}\n")
        return 0
    if cmd == "omega":
        return _module_result(args, syzygy(M))
    if cmd == "coomega":
        return _module_result(args, cosyzygy(M))
    if cmd == "nu":
        return _module_result(args, nakayama_shift(M, args.k))
    if cmd == "tau":
        try:
            return _module_result(args, ar_translate(M))
        except ValueError as e:
            raise CliError("tau-undefined", str(e), code=1) from None
    if cmd == "classify":
        report = classify_versal_ring(M, args.order)
        data = report.to_json()
        text = "".join(f"{k}: {json.dumps(v) if isinstance(v, dict) else v}\n" for k, v in data.items())
        _output(args, data, text)
        return 0
    if cmd == "lift":
        tangent = first_order_lifts(M.trimmed())
        results = []
        for i, cls in enumerate(tangent):
            lifted, obs = extend_lift(
                lift_from_tangent(cls, TruncatedRing(field, 2)), args.order
            )
            results.append(
                {
                    "direction": i,
                    "order_reached": lifted.order,
                    "obstruction": obs.to_json() if obs else None,
                }
            )
        data = {"tangent_dim": len(tangent), "extensions": results}
        text = f"tangent_dim: {len(tangent)}\n" + "".join(
            f"direction {r['direction']}: reached order {r['order_reached']}"
            + (f", obstructed at {r['obstruction']['order']}" if r["obstruction"] else "")
            + "\n"
            for r in results
        )
        _output(args, data, text)
        return 0
    if cmd == "orbit":
        graph = orbit_graph(M, args.radius)
        if args.dot:
            _write(args, emit_dot(graph))
        else:
            data = graph.to_json()
            text = "".join(
                f"[{n['id']}] {n['label']}" + (" (undecided)" if n["undecided"] else "") + "\n"
                for n in data["nodes"]
            ) + "".join(
                f"{e['from']} -{_OP_SYMBOLS[e['op']]}-> {e['to']}\n" for e in data["edges"]
            )
            _output(args, data, text)
        return 0
    raise CliError("unknown-command", cmd)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except CliError as e:
        payload = {"error": {"kind": e.kind, "detail": e.detail}}
        if args.json:
            sys.stderr.write(json.dumps(payload) + "\n")
        else:
            sys.stderr.write(f"error ({e.kind}): {e.detail}\n")
        return e.code
    except ValueError as e:
        payload = {"error": {"kind": "value-error", "detail": str(e)}}
        if args.json:
            sys.stderr.write(json.dumps(payload) + "\n")
        else:
            sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
