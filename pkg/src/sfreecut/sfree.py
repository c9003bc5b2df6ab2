"""S-free bodies: checks, maximality, and the constructions that enlarge them.

A body is stored in the anchored form ``{x : a_i (x - f) <= 1}``. All
statements about "every point of S" are certified inside a :class:`SearchBox`
only, and every report carries the box it was certified on.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import NamedTuple, Optional, Sequence, Union

from .errors import CertificationError, DimensionError, NotSFreeError, PreconditionError
from .lattice import SDescription, SearchBox, enumerate_integer_points, recession_generators_of_S
from .linalg import RatVec, combine, dot, is_integral, is_zero, sub, vec, zeros
from .polyhedron import (
    HPolyhedron,
    Location,
    dimension,
    double_description,
    facet_rel_interior_test,
    facet_rows,
    membership,
)


@dataclass(frozen=True)
class SFreeBody:
    """``{x : a_i (x - f) <= 1 for every row a_i}`` with ``f`` in its interior."""

    f: RatVec
    rows: tuple

    def __post_init__(self):
        f = vec(self.f)
        rows = tuple(vec(a) for a in self.rows)
        for a in rows:
            if len(a) != len(f):
                raise DimensionError(f"row of length {len(a)} for anchor of dimension {len(f)}")
        if len(set(rows)) != len(rows):
            raise ValueError("rows must be pairwise distinct")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.f)

    @classmethod
    def from_inequalities(cls, A, b, f) -> "SFreeBody":
        """Canonicalize ``A x <= b`` around an interior point ``f``."""
        f = vec(f)
        P = HPolyhedron.from_rows(A, b, len(f))
        rows = []
        for a, beta in P.rows():
            slack = beta - dot(a, f)
            if slack <= 0:
                raise PreconditionError("anchor must satisfy every inequality strictly")
            row = tuple(c / slack for c in a)
            if row not in rows:
                rows.append(row)
        return cls(f, tuple(rows))

    def to_hpolyhedron(self) -> HPolyhedron:
        return HPolyhedron(self.rows, tuple(1 + dot(a, self.f) for a in self.rows), self.n)

    def with_rows(self, rows) -> "SFreeBody":
        return SFreeBody(self.f, tuple(rows))


Body = Union[SFreeBody, HPolyhedron]


def _poly(B: Body) -> HPolyhedron:
    return B.to_hpolyhedron() if isinstance(B, SFreeBody) else B


def _require_dims(B: Body, S: SDescription, box: Optional[SearchBox] = None):
    n = B.n
    if S.n != n or (box is not None and box.n != n):
        raise DimensionError("body, S and box must share one dimension")


class Verdict(str, enum.Enum):
    MAXIMAL_CASE_I = "maximal-case-i"
    MAXIMAL_CASE_II = "maximal-case-ii"
    NOT_MAXIMAL = "not-maximal"
    UNDECIDED_BOX = "undecided-box"

    def __str__(self):
        return self.value

    @property
    def is_maximal(self) -> bool:
        return self in (Verdict.MAXIMAL_CASE_I, Verdict.MAXIMAL_CASE_II)


@dataclass(frozen=True)
class MaximalityReport:
    verdict: Verdict
    facet_certificates: tuple
    violating_point: Optional[tuple]
    box_used: SearchBox
    redundant_rows: tuple = ()
    # full-dimensionality is tested on B ∩ Q, a stand-in for B ∩ conv(S)
    interior_proxy: str = "Q"


class SFreeCheck(NamedTuple):
    free: bool
    witness: Optional[tuple]


def is_s_free(B: Body, S: SDescription, box: SearchBox) -> SFreeCheck:
    """Look for a point of S in the interior of ``B``; returns the lexicographically first one."""
    _require_dims(B, S, box)
    P = _poly(B)
    for x in enumerate_integer_points(P.intersect(S.Q), box):
        if membership(P, x) is Location.INTERIOR:
            return SFreeCheck(False, x)
    return SFreeCheck(True, None)


class FacetCertificates(NamedTuple):
    certificates: tuple
    redundant_rows: tuple


def _tight_points(P: HPolyhedron, i: int, S: SDescription, box: SearchBox):
    a, beta = P.A[i], P.b[i]
    region = P.intersect(S.Q).add_row(tuple(-c for c in a), -beta)
    return enumerate_integer_points(region, box)


def facet_certificates(B: Body, S: SDescription, box: SearchBox) -> FacetCertificates:
    """Per row, the lexicographically smallest point of S in the relative interior of its facet."""
    _require_dims(B, S, box)
    P = _poly(B)
    if dimension(P) < P.n:
        raise PreconditionError("facet certificates need a full-dimensional body")
    facets = set(facet_rows(P))
    certs, redundant = [], []
    for i in range(P.m):
        if i not in facets:
            certs.append(None)
            redundant.append(i)
            continue
        cert = next((x for x in _tight_points(P, i, S, box) if facet_rel_interior_test(P, i, x)), None)
        certs.append(cert)
    return FacetCertificates(tuple(certs), tuple(redundant))


def _hyperplane_has_lattice_points(a: Sequence, beta) -> bool:
    den = math.lcm(*(Fraction(c).denominator for c in a))
    ints = [int(c * den) for c in a]
    g = reduce(math.gcd, ints, 0)
    if g == 0:
        return beta == 0
    rhs = Fraction(beta) * den / g
    return rhs.denominator == 1


def _within_box(P: HPolyhedron, box: SearchBox) -> bool:
    G = double_description(P)
    if G.empty:
        return True
    if not G.is_bounded:
        return False
    return all(box.contains(p) for p in G.points)


def _facet_search_exhausted(P: HPolyhedron, i: int, S: SDescription, box: SearchBox) -> bool:
    """True when no point of S outside ``box`` could certify facet ``i``."""
    a, beta = P.A[i], P.b[i]
    if not _hyperplane_has_lattice_points(a, beta):
        return True
    face = P.intersect(S.Q).add_row(tuple(-c for c in a), -beta)
    return _within_box(face, box)


def is_maximal_s_free(B: Body, S: SDescription, box: SearchBox) -> MaximalityReport:
    """Decide maximality within ``box`` by the two polyhedral cases of the characterization.

    Accepts an anchored body or a bare inequality system; the latter is how a
    half-space whose intersection with S's hull has empty interior is given.
    """
    _require_dims(B, S, box)
    P = _poly(B)
    check = is_s_free(P, S, box)
    if not check.free:
        return MaximalityReport(Verdict.NOT_MAXIMAL, (None,) * P.m, check.witness, box)

    PQ = P.intersect(S.Q)
    if dimension(PQ) == P.n:
        certs, redundant = facet_certificates(P, S, box)
        open_rows = [i for i in range(P.m) if i not in redundant and certs[i] is None]
        if not open_rows:
            verdict = Verdict.MAXIMAL_CASE_I
        elif all(_facet_search_exhausted(P, i, S, box) for i in open_rows):
            verdict = Verdict.NOT_MAXIMAL
        else:
            verdict = Verdict.UNDECIDED_BOX
        return MaximalityReport(verdict, certs, None, box, redundant)

    facets = facet_rows(P) if dimension(P) == P.n else []
    if len(facets) != 1:
        return MaximalityReport(Verdict.NOT_MAXIMAL, (None,) * P.m, None, box)
    (i,) = facets
    redundant = tuple(j for j in range(P.m) if j != i)
    a = P.A[i]
    gens = recession_generators_of_S(S).cone_generators()
    if any(dot(a, r) < 0 for r in gens):
        # S recedes into the open half-space along a lattice direction
        return MaximalityReport(Verdict.NOT_MAXIMAL, (None,) * P.m, None, box, redundant)
    touching = next(iter(_tight_points(P, i, S, box)), None)
    certs = tuple(touching if j == i else None for j in range(P.m))
    if touching is not None:
        verdict = Verdict.MAXIMAL_CASE_II
    elif _facet_search_exhausted(P, i, S, box):
        verdict = Verdict.NOT_MAXIMAL
    else:
        verdict = Verdict.UNDECIDED_BOX
    return MaximalityReport(verdict, certs, None, box, redundant)


def lineality_extend(B: SFreeBody, r: Sequence, S: SDescription, box: SearchBox) -> SFreeBody:
    """The body ``B + span(r)`` for a direction receding in both ``B`` and ``Q``."""
    _require_dims(B, S, box)
    r = vec(r)
    if len(r) != B.n:
        raise DimensionError("direction has the wrong dimension")
    if is_zero(r):
        raise PreconditionError("direction must be nonzero")
    if any(dot(a, r) > 0 for a in B.rows):
        raise PreconditionError("direction is not in the recession cone of the body")
    if any(dot(a, r) > 0 for a in S.Q.A):
        raise PreconditionError("direction is not in the recession cone of Q")
    if dimension(B.to_hpolyhedron().intersect(S.Q)) < B.n:
        raise PreconditionError("body ∩ Q must be full-dimensional")
    out = B.with_rows(a for a in B.rows if dot(a, r) == 0)
    check = is_s_free(out, S, box)
    if not check.free:
        raise CertificationError(f"extended body contains {check.witness} of S in its interior")
    return out


# -- companion lattice-free set ----------------------------------------------------


def _integral_row(a: Sequence, beta) -> tuple[RatVec, Fraction]:
    entries = list(a) + [beta]
    den = math.lcm(*(Fraction(c).denominator for c in entries))
    ints = [int(Fraction(c) * den) for c in entries]
    g = reduce(math.gcd, ints, 0) or 1
    return tuple(Fraction(c // g) for c in ints[:-1]), Fraction(ints[-1] // g)


def shell(S: SDescription) -> HPolyhedron:
    """``A x <= b + 1/2`` with each row of ``Q`` first scaled to coprime integers."""
    A, b = [], []
    for a, beta in S.Q.rows():
        ia, ib = _integral_row(a, beta)
        A.append(ia)
        b.append(ib + Fraction(1, 2))
    return HPolyhedron.from_rows(A, b, S.n)


def _has_integer_point_in_rel_interior(K: HPolyhedron, i: int, box: SearchBox) -> bool:
    a, beta = K.A[i], K.b[i]
    region = K.add_row(tuple(-c for c in a), -beta)
    return any(facet_rel_interior_test(K, i, x) for x in enumerate_integer_points(region, box))


def tighten_lattice(B: SFreeBody, S: SDescription, box: SearchBox) -> HPolyhedron:
    """Intersect ``B`` with the shell of Q and push or drop shell facets until
    each one carries an integer point in its relative interior.

    Returns the body rows followed by the surviving shell rows.
    """
    _require_dims(B, S, box)
    check = is_s_free(B, S, box)
    if not check.free:
        raise NotSFreeError("body is not S-free", check.witness)
    PB = B.to_hpolyhedron()
    k = PB.m
    sh = shell(S)
    full = PB.intersect(sh)
    facets = set(facet_rows(full)) if not double_description(full).empty else set()
    current = [(a, beta) for j, (a, beta) in enumerate(sh.rows()) if k + j in facets]
    budget = len(current)

    def assemble(rows):
        return PB.intersect(HPolyhedron.from_rows([a for a, _ in rows], [beta for _, beta in rows], PB.n))

    for _ in range(budget + 1):
        K = assemble(current)
        kfacets = set(facet_rows(K))
        pending = next(
            (j for j in range(len(current))
             if k + j in kfacets and not _has_integer_point_in_rel_interior(K, k + j, box)),
            None,
        )
        if pending is None:
            return K
        a, beta = current[pending]
        others = assemble(current[:pending] + current[pending + 1:])
        inside = [x for x in enumerate_integer_points(others, box)
                  if membership(others, x) is Location.INTERIOR]
        if not inside:
            current = current[:pending] + current[pending + 1:]
            continue
        # distance to the half-space is the overshoot a.x - beta (never negative here)
        xbar = min(inside, key=lambda x: (dot(a, x) - beta, x))
        current[pending] = (a, dot(a, xbar))
    raise CertificationError("shell facets could not be certified within the step budget")


# -- facet tilting -----------------------------------------------------------------


@dataclass(frozen=True)
class TiltStep:
    action: str  # "tilt" or "drop"
    row_index: int
    tilted_row: RatVec
    partner_index: Optional[int] = None
    partner_row: Optional[RatVec] = None
    lambda_star: Optional[Fraction] = None
    x_bar: Optional[tuple] = None
    lambda_bar: Optional[Fraction] = None
    new_row: Optional[RatVec] = None


@dataclass(frozen=True)
class TiltResult:
    body: SFreeBody
    trace: tuple
    report: MaximalityReport
    box_only: bool = False
    complete: bool = True
    initial_rows: tuple = field(default=())

    @property
    def verdict(self) -> Verdict:
        return self.report.verdict


def _prune(body: SFreeBody) -> SFreeBody:
    P = body.to_hpolyhedron()
    keep = set(facet_rows(P))
    return body.with_rows(a for i, a in enumerate(body.rows) if i in keep)


def _best_candidate(points, f, d1, d2, others, lam_star):
    mixed = combine(lam_star, d1, d2)
    diff = sub(d1, d2)
    best = None
    for x in points:
        y = sub(x, f)
        if dot(mixed, y) >= 1 or any(dot(d, y) >= 1 for d in others):
            continue
        den = dot(diff, y)
        if den <= 0:
            continue
        lam = (1 - dot(d2, y)) / den
        if lam > lam_star and (best is None or lam > best[0]):
            best = (lam, x)
    return best


def tilt_to_maximal(C: SFreeBody, S: SDescription, box: SearchBox) -> TiltResult:
    """Enlarge ``C`` to a maximal S-free body by tilting uncertified facets.

    Each uncertified facet ``d1`` is replaced by ``l*d1 + (1-l)*d2`` for a
    partner row ``d2``, where ``l`` is the largest value whose tilted facet
    still passes through a point of S. Partners are tried in index order. A
    facet with no usable candidate is dropped if that keeps the body S-free;
    otherwise the run stops with a partial result.
    """
    _require_dims(C, S, box)
    if is_integral(C.f):
        raise PreconditionError("anchor f must not be an integer point")
    if not C.rows:
        raise PreconditionError("the whole space is never S-free")
    points = S.points(box)
    if not points:
        raise PreconditionError("S has no points in the search box")
    check = is_s_free(C, S, box)
    if not check.free:
        raise NotSFreeError("initial body is not S-free", check.witness)
    already = is_maximal_s_free(C, S, box)
    if already.verdict is Verdict.MAXIMAL_CASE_I:
        return TiltResult(C, (), already, initial_rows=C.rows)
    CQ = C.to_hpolyhedron().intersect(S.Q)
    for r in double_description(CQ).cone_generators():
        if any(dot(a, r) != 0 for a in C.rows):
            raise PreconditionError(
                f"body ∩ Q recedes along {r} outside the body's lineality space; extend lineality first")

    gens = recession_generators_of_S(S).cone_generators()
    f = C.f
    body = _prune(C)
    budget = len(C.rows)
    trace = []
    box_only = False
    complete = True
    while True:
        certs, _ = facet_certificates(body, S, box)
        pending = next((i for i, c in enumerate(certs) if c is None), None)
        if pending is None:
            break
        if len(trace) >= budget:
            complete = False
            break
        rows = list(body.rows)
        d1 = rows[pending]
        others = [d for j, d in enumerate(rows) if j != pending]
        h = [r for r in gens if dot(d1, r) > 0 and all(dot(d, r) <= 0 for d in others)]
        partners = [(j, d) for j, d in enumerate(rows) if j != pending] or [(None, zeros(body.n))]
        step = None
        for j, d2 in partners:
            if h:
                lam_star = max(-dot(d2, r) / dot(sub(d1, d2), r) for r in h)
            else:
                lam_star = Fraction(0)
            best = _best_candidate(points, f, d1, d2, others, lam_star)
            if best is None:
                continue
            lam_bar, xbar = best
            new_row = combine(lam_bar, d1, d2)
            if new_row in others:
                continue
            cand = body.with_rows(rows[:pending] + [new_row] + rows[pending + 1:])
            if not is_s_free(cand, S, box).free:
                continue
            if not facet_rel_interior_test(cand.to_hpolyhedron(), pending, xbar):
                continue
            step = TiltStep("tilt", pending, d1, j, d2, lam_star, xbar, lam_bar, new_row)
            body = cand
            break
        if step is None:
            dropped = body.with_rows(rows[:pending] + rows[pending + 1:])
            if dropped.rows and is_s_free(dropped, S, box).free:
                step = TiltStep("drop", pending, d1)
                body = dropped
                box_only = True
            else:
                complete = False
                break
        trace.append(step)
        body = _prune(body)
    report = is_maximal_s_free(body, S, box)
    return TiltResult(body, tuple(trace), report, box_only, complete, C.rows)


__all__ = [
    "SFreeBody",
    "Verdict",
    "MaximalityReport",
    "SFreeCheck",
    "FacetCertificates",
    "TiltStep",
    "TiltResult",
    "is_s_free",
    "facet_certificates",
    "is_maximal_s_free",
    "lineality_extend",
    "shell",
    "tighten_lattice",
    "tilt_to_maximal",
]
