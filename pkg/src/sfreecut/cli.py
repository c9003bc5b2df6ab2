"""Command line interface.

Every subcommand prints a JSON report on stdout that embeds the search box it
was certified on. Exit status is 0 on success, 1 on a negative verdict (body
not S-free, not maximal, function not valid) and 2 on bad input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

from . import __version__
from .cutgen import generate_cut
from .errors import FormatError, NotSFreeError, SFreeCutError
from .formats import body_doc, box_doc, dumps, emit_body, load_body, load_instance, q, qmat, qvec
from .gauge import GaugeFunction, polar, polar_of_polyhedron
from .lattice import SearchBox, default_box, enumerate_integer_points
from .polyhedron import HPolyhedron, facet_rel_interior_test, facet_rows
from .sfree import (
    SFreeBody,
    Verdict,
    is_maximal_s_free,
    is_s_free,
    tighten_lattice,
    tilt_to_maximal,
)
from .svg import plot_svg
from .verifier import verify_validity

log = logging.getLogger("sfreecut")

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


def _pt(x):
    return None if x is None else qvec(x)


def _resolve_box(args, inst_box, region: Optional[HPolyhedron], n: int) -> SearchBox:
    if args.box:
        box = SearchBox.parse(args.box)
        if box.n != n:
            raise FormatError(f"--box has dimension {box.n}, expected {n}")
        return box
    if inst_box is not None:
        return inst_box
    return default_box(region, n)


def _poly(B):
    return B.to_hpolyhedron() if isinstance(B, SFreeBody) else B


def _need_anchor(B, what: str) -> SFreeBody:
    if not isinstance(B, SFreeBody):
        raise FormatError(f"{what} needs an anchored body with fields 'f' and 'rows'")
    return B


def trace_doc(trace) -> list:
    out = []
    for st in trace:
        d = {"action": st.action, "row_index": st.row_index, "tilted_row": qvec(st.tilted_row)}
        if st.action == "tilt":
            d.update(
                partner_index=st.partner_index,
                partner_row=qvec(st.partner_row),
                lambda_star=q(st.lambda_star),
                x_bar=qvec(st.x_bar),
                lambda_bar=q(st.lambda_bar),
                new_row=qvec(st.new_row),
            )
        out.append(d)
    return out


def report_doc(rep) -> dict:
    return {
        "verdict": str(rep.verdict),
        "facet_certificates": [_pt(c) for c in rep.facet_certificates],
        "redundant_rows": list(rep.redundant_rows),
        "violating_point": _pt(rep.violating_point),
        "interior_proxy": rep.interior_proxy,
        "box": box_doc(rep.box_used),
    }


def _write(path, text):
    Path(path).write_text(text, encoding="utf-8")


def cmd_check(args) -> int:
    inst, ibox = load_instance(args.instance)
    B = load_body(args.body)
    P = _poly(B)
    box = _resolve_box(args, ibox, P.intersect(inst.S.Q), inst.n)
    free = is_s_free(B, inst.S, box)
    rep = is_maximal_s_free(B, inst.S, box)
    doc = {"command": "check", "s_free": free.free, "witness": _pt(free.witness), **report_doc(rep)}
    print(dumps(doc), end="")
    return EXIT_NEGATIVE if (not free.free or rep.verdict is Verdict.NOT_MAXIMAL) else EXIT_OK


def cmd_maximalize(args) -> int:
    inst, ibox = load_instance(args.instance)
    C = _need_anchor(load_body(args.body), "maximalize")
    box = _resolve_box(args, ibox, C.to_hpolyhedron().intersect(inst.S.Q), inst.n)
    res = tilt_to_maximal(C, inst.S, box)
    if args.out:
        _write(args.out, emit_body(res.body))
    doc = {
        "command": "maximalize",
        "body": body_doc(res.body),
        "trace": trace_doc(res.trace),
        "complete": res.complete,
        "box_only": res.box_only,
        **report_doc(res.report),
    }
    if args.trace:
        for st in res.trace:
            if st.action == "tilt":
                print(f"tilt row {st.row_index}: partner {st.partner_index}, lambda*={st.lambda_star}, "
                      f"x={st.x_bar}, lambda={st.lambda_bar}, new row {tuple(map(str, st.new_row))}",
                      file=sys.stderr)
            else:
                print(f"drop row {st.row_index}", file=sys.stderr)
    print(dumps(doc), end="")
    return EXIT_OK


def cmd_cut(args) -> int:
    inst, ibox = load_instance(args.instance)
    initial = _need_anchor(load_body(args.body), "cut") if args.body else None
    region = initial.to_hpolyhedron().intersect(inst.S.Q) if initial else None
    box = _resolve_box(args, ibox, region, inst.n)
    res = generate_cut(inst, initial, box)
    doc = {
        "command": "cut",
        "coefficients": qvec(res.coefficients),
        "rays": qmat(inst.rays),
        "body": body_doc(res.body),
        "trace": trace_doc(res.trace),
        **report_doc(res.maximality),
    }
    if args.out:
        _write(args.out, dumps({"coefficients": qvec(res.coefficients), "body": body_doc(res.body)}))
    print(dumps(doc), end="")
    return EXIT_OK


def cmd_verify(args) -> int:
    inst, ibox = load_instance(args.instance)
    B = _need_anchor(load_body(args.body), "verify")
    box = _resolve_box(args, ibox, B.to_hpolyhedron().intersect(inst.S.Q), inst.n)
    rep = verify_validity(GaugeFunction.of_body(B), inst, box)
    doc = {
        "command": "verify",
        "valid": rep.valid,
        "minimum_value": None if rep.minimum_value is None else q(rep.minimum_value),
        "attained_at": None if rep.attained_at is None else
        {"x": qvec(rep.attained_at[0]), "s": qvec(rep.attained_at[1])},
        "unbounded_below": rep.unbounded_below,
        "ray_witness": _pt(rep.ray_witness),
        "points_checked": rep.points_checked,
        "unreachable_points": rep.unreachable_points,
        "box": box_doc(box),
    }
    print(dumps(doc), end="")
    return EXIT_OK if rep.valid else EXIT_NEGATIVE


def cmd_polar(args) -> int:
    B = load_body(args.body)
    P = polar(B.rows) if isinstance(B, SFreeBody) else polar_of_polyhedron(B)
    doc = {"command": "polar", "generators": qmat(P.generators), "include_origin": P.include_origin}
    if args.out:
        _write(args.out, dumps({"generators": qmat(P.generators), "include_origin": P.include_origin}))
    print(dumps(doc), end="")
    return EXIT_OK


def cmd_tighten(args) -> int:
    inst, ibox = load_instance(args.instance)
    B = _need_anchor(load_body(args.body), "tighten")
    box = _resolve_box(args, ibox, B.to_hpolyhedron().intersect(inst.S.Q), inst.n)
    K = tighten_lattice(B, inst.S, box)
    facets = set(facet_rows(K))
    certs = []
    for i in range(K.m):
        if i not in facets:
            certs.append(None)
            continue
        a, beta = K.A[i], K.b[i]
        region = K.add_row(tuple(-c for c in a), -beta)
        certs.append(next((_pt(x) for x in enumerate_integer_points(region, box)
                           if facet_rel_interior_test(K, i, x)), None))
    if args.out:
        _write(args.out, emit_body(K))
    doc = {"command": "tighten", "body_rows": len(B.rows), "companion": body_doc(K),
           "lattice_certificates": certs, "box": box_doc(box)}
    print(dumps(doc), end="")
    return EXIT_OK


def cmd_plot(args) -> int:
    inst, ibox = load_instance(args.instance)
    bodies = [load_body(p) for p in (args.body or [])]
    box = _resolve_box(args, ibox, None, inst.n) if (args.box or ibox) else SearchBox.cube(inst.n, 3)
    svg = plot_svg(inst.S, bodies, box, inst.f)
    if args.out:
        _write(args.out, svg)
        print(dumps({"command": "plot", "out": str(args.out), "box": box_doc(box)}), end="")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


COMMANDS = {
    "check": (cmd_check, "S-freeness and maximality report for a body"),
    "maximalize": (cmd_maximalize, "tilt a body to a maximal S-free body"),
    "cut": (cmd_cut, "cut coefficients for the instance's rays"),
    "verify": (cmd_verify, "brute-force validity check of a body's gauge"),
    "polar": (cmd_polar, "generators of the polar of a body"),
    "tighten": (cmd_tighten, "companion lattice-free set of a body"),
    "plot": (cmd_plot, "SVG figure of S and bodies"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sfreecut", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        if name != "polar":
            p.add_argument("--instance", required=True, metavar="PATH")
        if name == "plot":
            p.add_argument("--body", action="append", metavar="PATH")
        else:
            p.add_argument("--body", required=name not in ("cut",), metavar="PATH")
        p.add_argument("--box", metavar='"x1lo x1hi x2lo x2hi ..."')
        p.add_argument("--out", metavar="PATH")
        p.add_argument("--trace", action="store_true", help="human-readable trace on stderr")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    func = COMMANDS[args.command][0]
    try:
        return func(args)
    except NotSFreeError as exc:
        print(f"sfreecut: {exc} (witness {exc.witness})", file=sys.stderr)
        return EXIT_NEGATIVE
    except (SFreeCutError, ValueError) as exc:
        print(f"sfreecut: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
