"""Integer points of rational polyhedra, the set S, and planar hulls."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import DimensionError, UnboundedError
from .linalg import RatVec, primitive, sub, vec
from .polyhedron import (
    GeneratorForm,
    HPolyhedron,
    affine_dimension,
    double_description,
    recession_generators,
)

log = logging.getLogger(__name__)

DEFAULT_HALF_WIDTH = 10
BOX_MARGIN = 2


@dataclass(frozen=True)
class SearchBox:
    """Integer box ``lower <= x <= upper`` that finitizes every lattice search."""

    lower: tuple
    upper: tuple

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise DimensionError("box bounds differ in length")
        lo = tuple(int(v) for v in self.lower)
        hi = tuple(int(v) for v in self.upper)
        if any(a != Fraction(v) for a, v in zip(lo + hi, tuple(self.lower) + tuple(self.upper))):
            raise ValueError("box bounds must be integers")
        if any(a > b for a, b in zip(lo, hi)):
            raise ValueError(f"empty box: lower {lo} exceeds upper {hi}")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def n(self) -> int:
        return len(self.lower)

    @classmethod
    def cube(cls, n: int, half_width: int) -> "SearchBox":
        return cls((-half_width,) * n, (half_width,) * n)

    @classmethod
    def parse(cls, text: str) -> "SearchBox":
        """Parse ``"x1lo x1hi x2lo x2hi ..."``."""
        parts = [int(t) for t in text.replace(",", " ").split()]
        if not parts or len(parts) % 2:
            raise ValueError(f"box needs an even, nonzero number of integers, got {text!r}")
        return cls(tuple(parts[0::2]), tuple(parts[1::2]))

    def flat(self) -> list[int]:
        out = []
        for lo, hi in zip(self.lower, self.upper):
            out += [lo, hi]
        return out

    def contains(self, x: Sequence) -> bool:
        return all(lo <= v <= hi for lo, v, hi in zip(self.lower, x, self.upper))

    def as_polyhedron(self) -> HPolyhedron:
        return HPolyhedron.box(self.lower, self.upper)


def bounding_box(points: Sequence[Sequence], margin: int = 0) -> SearchBox:
    n = len(points[0])
    lo = tuple(math.floor(min(p[i] for p in points)) - margin for i in range(n))
    hi = tuple(math.ceil(max(p[i] for p in points)) + margin for i in range(n))
    return SearchBox(lo, hi)


def default_box(P: Optional[HPolyhedron], n: int) -> SearchBox:
    """Vertex bounding box of ``P`` plus a margin, or ``[-10, 10]^n`` if ``P`` is unbounded."""
    if P is not None:
        G = double_description(P)
        if not G.empty and G.is_bounded:
            return bounding_box(G.points, BOX_MARGIN)
    log.warning("no bounded region to size the search box; using [-%d, %d]^%d",
                DEFAULT_HALF_WIDTH, DEFAULT_HALF_WIDTH, n)
    return SearchBox.cube(n, DEFAULT_HALF_WIDTH)


def _last_coordinate_range(P: HPolyhedron, prefix: tuple, lo: int, hi: int):
    """Exact integer range for the last coordinate once all others are fixed."""
    k = len(prefix)
    lower, upper = Fraction(lo), Fraction(hi)
    for a, beta in P.rows():
        rest = beta - sum((a[j] * prefix[j] for j in range(k)), Fraction(0))
        c = a[k]
        if c > 0:
            upper = min(upper, rest / c)
        elif c < 0:
            lower = max(lower, rest / c)
        elif rest < 0:
            return range(0)
    return range(math.ceil(lower), math.floor(upper) + 1)


def _scan(P: HPolyhedron, ranges) -> Iterator[tuple]:
    n = P.n

    def rec(prefix):
        k = len(prefix)
        if k == n - 1:
            lo, hi = ranges[k]
            for v in _last_coordinate_range(P, prefix, lo, hi):
                yield prefix + (v,)
            return
        lo, hi = ranges[k]
        for v in range(lo, hi + 1):
            yield from rec(prefix + (v,))

    if n == 0:
        if P.contains(()):
            yield ()
        return
    yield from rec(())


def enumerate_integer_points(P: HPolyhedron, box: Optional[SearchBox] = None) -> list[tuple]:
    """All points of ``P`` (within ``box`` if given) with integer coordinates, sorted.

    Without a box ``P`` must be bounded; the scan then covers the integer hull
    of its vertex bounding box.
    """
    if box is not None and box.n != P.n:
        raise DimensionError(f"box of dimension {box.n} for polyhedron in dimension {P.n}")
    if box is None:
        G = double_description(P)
        if G.empty:
            return []
        if not G.is_bounded:
            raise UnboundedError("polyhedron is unbounded and no search box was given")
        bb = bounding_box(G.points)
        ranges = list(zip(bb.lower, bb.upper))
    else:
        ranges = list(zip(box.lower, box.upper))
    return list(_scan(P, ranges))


@dataclass(frozen=True)
class SDescription:
    """``S = Q ∩ Z^n`` for a rational polyhedron ``Q``."""

    Q: HPolyhedron

    @property
    def n(self) -> int:
        return self.Q.n

    @classmethod
    def from_rows(cls, A, b, n: Optional[int] = None) -> "SDescription":
        return cls(HPolyhedron.from_rows(A, b, n))

    @classmethod
    def lattice(cls, n: int) -> "SDescription":
        """``S = Z^n``."""
        return cls(HPolyhedron.whole_space(n))

    def contains(self, x: Sequence) -> bool:
        return s_contains(self, x)

    def points(self, box: SearchBox) -> list[tuple]:
        return enumerate_integer_points(self.Q, box)

    def is_full_dimensional(self, box: SearchBox) -> bool:
        """True once ``n + 1`` affinely independent points of S are found in ``box``."""
        return affine_dimension(self.points(box)) == self.n


def _as_integer_point(x: Sequence) -> tuple:
    out = []
    for v in x:
        if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
            raise TypeError(f"lattice points need integer coordinates, got {v!r}")
        if Fraction(v).denominator != 1:
            raise TypeError(f"lattice points need integer coordinates, got {v!r}")
        out.append(int(v))
    return tuple(out)


def s_contains(S: SDescription, x: Sequence) -> bool:
    x = _as_integer_point(x)
    if len(x) != S.n:
        raise DimensionError(f"point of dimension {len(x)} for S in dimension {S.n}")
    return S.Q.contains(x)


def recession_generators_of_S(S: SDescription) -> GeneratorForm:
    """Generator form of ``rec(Q) = {r : A_Q r <= 0}``.

    Stands in for ``rec(conv(S))``; the two cones coincide for rational ``Q``
    whenever S is nonempty.
    """
    return recession_generators(S.Q)


# -- planar hulls ----------------------------------------------------------------


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_2d_vertices(points: Sequence[Sequence]) -> list[RatVec]:
    """Counter-clockwise hull vertices, starting at the lexicographic minimum."""
    pts = sorted({vec(p) for p in points})
    if any(len(p) != 2 for p in pts):
        raise DimensionError("hull_2d works in the plane only")
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _row(a, p):
    a = vec(a)
    pa = primitive(a)
    s = pa[0] / a[0] if a[0] else pa[1] / a[1]
    return pa, s * (a[0] * p[0] + a[1] * p[1])


def hull_2d(points: Sequence[Sequence]) -> HPolyhedron:
    """Irredundant inequality description of the convex hull of planar points.

    Lower-dimensional hulls come out as pairs of opposite inequalities: a
    segment gives its line twice plus two end caps, a single point gives two
    pairs of coordinate bounds.
    """
    if not points:
        raise ValueError("hull of an empty point set")
    V = hull_2d_vertices(points)
    A, b = [], []
    if len(V) == 1:
        (p,) = V
        for a in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            row, rhs = _row(a, p)
            A.append(row)
            b.append(rhs)
    elif affine_dimension(V) == 1:
        p, q = V[0], V[-1]
        d = sub(q, p)
        nrm = (-d[1], d[0])
        for a, pt in ((nrm, p), (tuple(-c for c in nrm), p), (d, q), (tuple(-c for c in d), p)):
            row, rhs = _row(a, pt)
            A.append(row)
            b.append(rhs)
    else:
        for i, p in enumerate(V):
            q = V[(i + 1) % len(V)]
            row, rhs = _row((q[1] - p[1], p[0] - q[0]), p)
            A.append(row)
            b.append(rhs)
    return HPolyhedron.from_rows(A, b, 2)


__all__ = [
    "SearchBox",
    "SDescription",
    "bounding_box",
    "default_box",
    "enumerate_integer_points",
    "s_contains",
    "recession_generators_of_S",
    "hull_2d",
    "hull_2d_vertices",
]
