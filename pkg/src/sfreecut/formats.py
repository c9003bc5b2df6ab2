"""JSON documents for instances, bodies and reports.

Every rational is written as a string (``"3/4"``, ``"-2"``) so nothing is lost
to floating point. Canonical emission uses sorted keys and two-space indent,
which makes ``emit(parse(text)) == text`` for canonical input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .cutgen import TableauInstance
from .errors import FormatError, SFreeCutError
from .lattice import SDescription, SearchBox
from .linalg import rat
from .polyhedron import HPolyhedron
from .sfree import SFreeBody


def q(x) -> str:
    return str(Fraction(x))


def qvec(v) -> list[str]:
    return [q(x) for x in v]


def qmat(M) -> list[list[str]]:
    return [qvec(r) for r in M]


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


class _Reader:
    def __init__(self, source: str):
        self.source = source

    def fail(self, where: str, msg: str):
        raise FormatError(f"{self.source}: at {where}: {msg}")

    def get(self, doc, key, where, required=True):
        if not isinstance(doc, dict):
            self.fail(where, "expected an object")
        if key not in doc:
            if required:
                self.fail(where, f"missing field {key!r}")
            return None
        return doc[key]

    def scalar(self, x, where) -> Fraction:
        if isinstance(x, bool) or not isinstance(x, (str, int)):
            self.fail(where, f"expected a rational string, got {x!r}")
        try:
            return rat(x)
        except (ValueError, TypeError) as exc:
            self.fail(where, str(exc))

    def vector(self, v, where, n=None) -> tuple:
        if not isinstance(v, list):
            self.fail(where, "expected an array")
        if n is not None and len(v) != n:
            self.fail(where, f"expected {n} entries, got {len(v)}")
        return tuple(self.scalar(x, f"{where}[{i}]") for i, x in enumerate(v))

    def matrix(self, M, where, n=None) -> tuple:
        if not isinstance(M, list):
            self.fail(where, "expected an array of rows")
        return tuple(self.vector(r, f"{where}[{i}]", n) for i, r in enumerate(M))

    def integer(self, x, where) -> int:
        v = self.scalar(x, where)
        if v.denominator != 1:
            self.fail(where, f"expected an integer, got {x!r}")
        return int(v)


def _load_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _box_from(doc, rd: _Reader, where: str, n: int) -> SearchBox:
    lo = rd.get(doc, "lower", where)
    hi = rd.get(doc, "upper", where)
    if not isinstance(lo, list) or len(lo) != n:
        rd.fail(f"{where}.lower", f"expected {n} integers")
    if not isinstance(hi, list) or len(hi) != n:
        rd.fail(f"{where}.upper", f"expected {n} integers")
    lower = tuple(rd.integer(x, f"{where}.lower[{i}]") for i, x in enumerate(lo))
    upper = tuple(rd.integer(x, f"{where}.upper[{i}]") for i, x in enumerate(hi))
    try:
        return SearchBox(lower, upper)
    except ValueError as exc:
        rd.fail(where, str(exc))


def box_doc(box: SearchBox) -> dict:
    return {"lower": [str(v) for v in box.lower], "upper": [str(v) for v in box.upper]}


def parse_instance(text: str, source: str = "<instance>") -> tuple[TableauInstance, Optional[SearchBox]]:
    doc = _load_json(text, source)
    rd = _Reader(source)
    n_raw = rd.get(doc, "n", "$")
    if isinstance(n_raw, bool) or not isinstance(n_raw, int) or n_raw < 1:
        rd.fail("$.n", f"expected a positive integer, got {n_raw!r}")
    n = n_raw
    S_doc = rd.get(doc, "S", "$")
    A = rd.matrix(rd.get(S_doc, "A", "$.S"), "$.S.A", n)
    b = rd.vector(rd.get(S_doc, "b", "$.S"), "$.S.b", len(A))
    f = rd.vector(rd.get(doc, "f", "$"), "$.f", n)
    rays = rd.matrix(rd.get(doc, "rays", "$"), "$.rays", n)
    box_raw = rd.get(doc, "box", "$", required=False)
    box = None if box_raw is None else _box_from(box_raw, rd, "$.box", n)
    try:
        inst = TableauInstance(f, rays, SDescription(HPolyhedron(A, b, n)))
    except SFreeCutError as exc:
        raise FormatError(f"{source}: {exc}") from exc
    return inst, box


def instance_doc(inst: TableauInstance, box: Optional[SearchBox] = None) -> dict:
    doc = {
        "n": inst.n,
        "S": {"A": qmat(inst.S.Q.A), "b": qvec(inst.S.Q.b)},
        "f": qvec(inst.f),
        "rays": qmat(inst.rays),
    }
    if box is not None:
        doc["box"] = box_doc(box)
    return doc


def emit_instance(inst: TableauInstance, box: Optional[SearchBox] = None) -> str:
    return dumps(instance_doc(inst, box))


def parse_body(text: str, source: str = "<body>") -> Union[SFreeBody, HPolyhedron]:
    """An anchored body ``{"f", "rows"}`` or a bare system ``{"n", "A", "b"}``."""
    doc = _load_json(text, source)
    rd = _Reader(source)
    if isinstance(doc, dict) and "rows" in doc:
        f = rd.vector(rd.get(doc, "f", "$"), "$.f")
        rows = rd.matrix(doc["rows"], "$.rows", len(f))
        try:
            return SFreeBody(f, rows)
        except (SFreeCutError, ValueError) as exc:
            raise FormatError(f"{source}: {exc}") from exc
    n_raw = rd.get(doc, "n", "$")
    if isinstance(n_raw, bool) or not isinstance(n_raw, int) or n_raw < 1:
        rd.fail("$.n", f"expected a positive integer, got {n_raw!r}")
    A = rd.matrix(rd.get(doc, "A", "$"), "$.A", n_raw)
    b = rd.vector(rd.get(doc, "b", "$"), "$.b", len(A))
    return HPolyhedron(A, b, n_raw)


def body_doc(B: Union[SFreeBody, HPolyhedron]) -> dict:
    if isinstance(B, SFreeBody):
        return {"f": qvec(B.f), "rows": qmat(B.rows)}
    return {"n": B.n, "A": qmat(B.A), "b": qvec(B.b)}


def emit_body(B: Union[SFreeBody, HPolyhedron]) -> str:
    return dumps(body_doc(B))


def read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from exc


def load_instance(path):
    return parse_instance(read_text(path), str(path))


def load_body(path):
    return parse_body(read_text(path), str(path))
