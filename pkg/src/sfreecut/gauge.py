"""Gauge functions ``r -> max_j d_j r`` and their polars.

A :class:`GaugeFunction` doubles as the cut-generating function of an
anchored body: ``body_of`` and ``GaugeFunction.of_body`` are mutually inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .errors import DimensionError, NotSFreeError, PreconditionError
from .lattice import SDescription, SearchBox
from .linalg import RatVec, dot, is_integral, is_zero, vec, zeros
from .polyhedron import HPolyhedron, in_convex_hull, vertices_to_hpolyhedron
from .sfree import SFreeBody, is_maximal_s_free, is_s_free, tilt_to_maximal


@dataclass(frozen=True)
class GaugeFunction:
    f: RatVec
    rows: tuple

    def __post_init__(self):
        f = vec(self.f)
        rows = tuple(vec(d) for d in self.rows)
        if not rows:
            raise ValueError("a gauge needs at least one row")
        if any(len(d) != len(f) for d in rows):
            raise DimensionError("rows and anchor differ in dimension")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.f)

    @classmethod
    def of_body(cls, B: SFreeBody) -> "GaugeFunction":
        return cls(B.f, B.rows)

    def __call__(self, r: Sequence) -> Fraction:
        return gauge_eval(self, r)


def gauge_eval(psi: GaugeFunction, r: Sequence) -> Fraction:
    r = vec(r)
    if len(r) != psi.n:
        raise DimensionError(f"direction of dimension {len(r)} for gauge in dimension {psi.n}")
    return max(dot(d, r) for d in psi.rows)


def body_of(psi: GaugeFunction) -> SFreeBody:
    """The level set ``{x : psi(x - f) <= 1}``."""
    return SFreeBody(psi.f, tuple(dict.fromkeys(psi.rows)))


@dataclass(frozen=True)
class PolarBody:
    """``conv({0} ∪ generators)``: the polar of ``{r : a_i r <= 1}``."""

    generators: tuple
    include_origin: bool = True

    @property
    def n(self) -> int:
        return len(self.generators[0])

    def points(self) -> list:
        pts = list(self.generators)
        if self.include_origin:
            pts.append(zeros(self.n))
        return pts

    def to_hpolyhedron(self) -> HPolyhedron:
        return vertices_to_hpolyhedron(self.points())

    def contains(self, y: Sequence) -> bool:
        return in_convex_hull(y, self.points()) is not None

    def polar_generators(self) -> list:
        """Generators of the polar of this body, read off its facets.

        Requires the origin in the interior (the original body bounded); each
        facet ``c y <= c0`` with ``c0 > 0`` contributes the point ``c / c0``.
        """
        H = self.to_hpolyhedron()
        out = []
        for c, c0 in H.rows():
            if c0 <= 0:
                raise PreconditionError("origin is not interior to the polar; the body is unbounded")
            out.append(tuple(a / c0 for a in c))
        return out


def polar(K_rows: Sequence[Sequence]) -> PolarBody:
    """Polar of ``K = {r : a_i r <= 1}``, which is ``conv{0, a_1, ..., a_t}``."""
    rows = tuple(vec(a) for a in K_rows)
    if not rows:
        raise PreconditionError("need at least one row")
    n = len(rows[0])
    if any(len(a) != n for a in rows):
        raise DimensionError("rows differ in dimension")
    if any(is_zero(a) for a in rows):
        raise PreconditionError("degenerate zero row")
    return PolarBody(rows)


def polar_of_polyhedron(K: HPolyhedron) -> PolarBody:
    """Polar of ``{r : A r <= b}``; the origin must satisfy every row strictly."""
    if any(beta <= 0 for beta in K.b):
        raise PreconditionError("origin is not in the interior of K")
    return polar([tuple(c / beta for c in a) for a, beta in K.rows()])


def rho(K_rows: Sequence[Sequence], r: Sequence) -> Fraction:
    """Smallest sublinear function whose unit level set is ``{r : a_i r <= 1}``."""
    P = polar(K_rows)
    return max(dot(a, vec(r)) for a in P.generators)


def dominates(psi_prime: GaugeFunction, psi: GaugeFunction) -> bool:
    """True iff ``psi_prime <= psi`` everywhere.

    Decided exactly: every row of ``psi_prime`` must lie in the convex hull of
    the rows of ``psi``.
    """
    if psi_prime.f != psi.f:
        raise PreconditionError("gauges are anchored at different points")
    if psi_prime.n != psi.n:
        raise DimensionError("gauges differ in dimension")
    return all(in_convex_hull(d, psi.rows) is not None for d in psi_prime.rows)


class MinimalityCheck(NamedTuple):
    minimal: bool
    witness: Optional[GaugeFunction]


def is_minimal(psi: GaugeFunction, S: SDescription, box: SearchBox) -> MinimalityCheck:
    """Minimal iff the level set is maximal S-free; otherwise the tilted gauge is returned."""
    if is_integral(psi.f):
        raise PreconditionError("anchor f must not be an integer point")
    B = body_of(psi)
    check = is_s_free(B, S, box)
    if not check.free:
        raise NotSFreeError("level set contains a point of S in its interior: not a valid function",
                            check.witness)
    if is_maximal_s_free(B, S, box).verdict.is_maximal:
        return MinimalityCheck(True, None)
    tilted = tilt_to_maximal(B, S, box)
    return MinimalityCheck(False, GaugeFunction.of_body(tilted.body))


__all__ = [
    "GaugeFunction",
    "PolarBody",
    "MinimalityCheck",
    "gauge_eval",
    "body_of",
    "polar",
    "polar_of_polyhedron",
    "rho",
    "dominates",
    "is_minimal",
]
