"""Rational polyhedra in inequality form and their generator form.

The bridge between the two representations is an incremental double
description (Motzkin) procedure that keeps an explicit lineality basis, so
cones that are not pointed are handled without a preliminary reduction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import DimensionError, NotFacetError
from .linalg import (
    RatMat,
    RatVec,
    add,
    dot,
    mat,
    nullspace,
    primitive,
    project_out,
    rank,
    row_space_basis,
    scale,
    solve_linear,
    sub,
    vec,
    zeros,
)


@dataclass(frozen=True)
class HPolyhedron:
    """``{x : A x <= b}``. Rows are stored exactly as given."""

    A: RatMat
    b: RatVec
    n: int

    def __post_init__(self):
        if len(self.A) != len(self.b):
            raise DimensionError(f"A has {len(self.A)} rows but b has {len(self.b)} entries")
        for row in self.A:
            if len(row) != self.n:
                raise DimensionError(f"row of length {len(row)} in dimension {self.n}")

    @classmethod
    def from_rows(cls, A: Iterable[Iterable], b: Iterable, n: Optional[int] = None) -> "HPolyhedron":
        A = mat(A)
        b = vec(b)
        if n is None:
            if not A:
                raise DimensionError("dimension must be given for a system without rows")
            n = len(A[0])
        return cls(A, b, n)

    @classmethod
    def whole_space(cls, n: int) -> "HPolyhedron":
        return cls((), (), n)

    @classmethod
    def box(cls, lower: Sequence, upper: Sequence) -> "HPolyhedron":
        n = len(lower)
        A, b = [], []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            A.append(e)
            b.append(upper[i])
            A.append([-c for c in e])
            b.append(-Fraction(lower[i]))
        return cls.from_rows(A, b, n)

    @property
    def m(self) -> int:
        return len(self.A)

    def rows(self):
        return zip(self.A, self.b)

    def intersect(self, other: "HPolyhedron") -> "HPolyhedron":
        if other.n != self.n:
            raise DimensionError(f"cannot intersect dimension {self.n} with {other.n}")
        return HPolyhedron(self.A + other.A, self.b + other.b, self.n)

    def add_row(self, a: Sequence, beta) -> "HPolyhedron":
        return HPolyhedron(self.A + (vec(a),), self.b + (Fraction(beta),), self.n)

    def drop_row(self, i: int) -> "HPolyhedron":
        return HPolyhedron(self.A[:i] + self.A[i + 1:], self.b[:i] + self.b[i + 1:], self.n)

    def slacks(self, x: Sequence) -> RatVec:
        if len(x) != self.n:
            raise DimensionError(f"point of dimension {len(x)} for polyhedron in dimension {self.n}")
        x = vec(x)
        return tuple(beta - dot(a, x) for a, beta in self.rows())

    def contains(self, x: Sequence) -> bool:
        return all(s >= 0 for s in self.slacks(x))

    def recession_cone(self) -> "HPolyhedron":
        return HPolyhedron(self.A, zeros(self.m), self.n)


@dataclass(frozen=True)
class GeneratorForm:
    """``conv(points) + cone(rays) + span(lineality)``.

    ``points`` always holds the point generators (one per minimal face);
    :attr:`vertices` exposes them only when they are genuine extreme points,
    which requires a trivial lineality space.
    """

    n: int
    points: tuple = ()
    rays: tuple = ()
    lineality: tuple = ()
    empty: bool = False

    @property
    def vertices(self) -> tuple:
        return () if self.lineality else self.points

    @property
    def lineality_basis(self) -> tuple:
        return self.lineality

    def cone_generators(self) -> list[RatVec]:
        """Rays plus both signs of every lineality vector."""
        out = list(self.rays)
        for v in self.lineality:
            out.append(v)
            out.append(tuple(-a for a in v))
        return out

    @property
    def is_bounded(self) -> bool:
        return not self.rays and not self.lineality

    def dimension(self) -> int:
        if self.empty:
            return -1
        p0 = self.points[0]
        dirs = [sub(p, p0) for p in self.points[1:]] + list(self.rays) + list(self.lineality)
        return rank(dirs)


# -- double description --------------------------------------------------------


def _adjacent(p, q, processed, target_rank):
    common = [a for a in processed if dot(a, p) == 0 and dot(a, q) == 0]
    if len(common) < target_rank:
        return False
    return rank(common) == target_rank


def cone_generators(rows: Sequence[Sequence], d: int) -> tuple[list[RatVec], list[RatVec]]:
    """Extreme rays and a lineality basis of ``{y in R^d : a y <= 0 for a in rows}``.

    Rows are inserted in the given order. Rays are returned as primitive
    integer vectors reduced modulo the lineality space and sorted
    lexicographically, so the output is canonical.
    """
    lin = [tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)]
    rays: list[RatVec] = []
    processed: list[RatVec] = []
    for a in rows:
        a = vec(a)
        if len(a) != d:
            raise DimensionError(f"constraint of length {len(a)} in dimension {d}")
        k = next((i for i, l in enumerate(lin) if dot(a, l) != 0), None)
        if k is not None:
            l = lin[k]
            al = dot(a, l)
            new_lin = []
            for j, lj in enumerate(lin):
                if j == k:
                    continue
                c = dot(a, lj)
                new_lin.append(sub(lj, scale(c / al, l)) if c else lj)
            new_rays = []
            for g in rays:
                c = dot(a, g)
                new_rays.append(primitive(sub(g, scale(c / al, l))) if c else g)
            new_rays.append(primitive(scale(-1 if al > 0 else 1, l)))
            lin, rays = new_lin, new_rays
        else:
            vals = [dot(a, g) for g in rays]
            pos = [g for g, v in zip(rays, vals) if v > 0]
            neg = [(g, v) for g, v in zip(rays, vals) if v < 0]
            pos_v = [v for v in vals if v > 0]
            keep = [g for g, v in zip(rays, vals) if v <= 0]
            target = d - len(lin) - 2
            processed_now = processed + [a]
            for p, vp in zip(pos, pos_v):
                for q, vq in neg:
                    if target >= 0 and _adjacent(p, q, processed, target):
                        keep.append(primitive(sub(scale(vp, q), scale(vq, p))))
            rays = keep
            processed = processed_now
            continue
        processed.append(a)
    lin_basis = row_space_basis(lin, d) if lin else []
    reduced = {primitive(project_out(g, lin_basis)) for g in rays}
    reduced.discard(zeros(d))
    return sorted(reduced), sorted(lin_basis)


@lru_cache(maxsize=8192)
def _dd_cached(A: RatMat, b: RatVec, n: int) -> GeneratorForm:
    homog = [(*zeros(n), Fraction(-1))]
    homog += [(*a, -beta) for a, beta in zip(A, b)]
    rays, lin = cone_generators(homog, n + 1)
    points, rec = [], []
    for g in rays:
        t = g[-1]
        if t > 0:
            points.append(tuple(c / t for c in g[:-1]))
        else:
            rec.append(g[:-1])
    lineality = [g[:-1] for g in lin]
    if not points:
        return GeneratorForm(n=n, empty=True)
    return GeneratorForm(
        n=n,
        points=tuple(sorted(points)),
        rays=tuple(sorted(rec)),
        lineality=tuple(sorted(lineality)),
    )


def double_description(P: HPolyhedron) -> GeneratorForm:
    """Generator form of ``P`` (``empty=True`` when ``P`` has no points)."""
    return _dd_cached(P.A, P.b, P.n)


def recession_generators(P: HPolyhedron) -> GeneratorForm:
    """Generator form of the cone ``{r : A r <= 0}``."""
    return double_description(P.recession_cone())


def is_bounded(P: HPolyhedron) -> bool:
    return double_description(P).is_bounded


def dimension(P: HPolyhedron) -> int:
    return double_description(P).dimension()


def is_empty(P: HPolyhedron) -> bool:
    return double_description(P).empty


# -- point location ------------------------------------------------------------


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"

    def __str__(self):
        return self.value


def membership(P: HPolyhedron, x: Sequence) -> Location:
    """Classify ``x`` by strict, tight or violated inequalities.

    A point is ``INTERIOR`` when every row is strict; for a polyhedron that is
    not full-dimensional that set is empty, so nothing is ever interior.
    """
    s = P.slacks(x)
    if any(v < 0 for v in s):
        return Location.OUTSIDE
    if all(v > 0 for v in s):
        return Location.INTERIOR
    return Location.BOUNDARY


# -- faces ---------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    points: tuple
    rays: tuple
    lineality: tuple
    implicit_rows: frozenset = field(default_factory=frozenset)

    @property
    def empty(self) -> bool:
        return not self.points

    def dimension(self) -> int:
        if not self.points:
            return -1
        p0 = self.points[0]
        dirs = [sub(p, p0) for p in self.points[1:]] + list(self.rays) + list(self.lineality)
        return rank(dirs)


@lru_cache(maxsize=8192)
def _face_cached(A: RatMat, b: RatVec, n: int, i: int) -> Face:
    G = _dd_cached(A, b, n)
    if G.empty:
        return Face((), (), ())
    a, beta = A[i], b[i]
    pts = tuple(p for p in G.points if dot(a, p) == beta)
    rys = tuple(r for r in G.rays if dot(a, r) == 0)
    if not pts:
        return Face((), (), ())
    implied = frozenset(
        j
        for j, (aj, bj) in enumerate(zip(A, b))
        if all(dot(aj, p) == bj for p in pts) and all(dot(aj, r) == 0 for r in rys)
    )
    return Face(pts, rys, G.lineality, implied)


def face_of_row(P: HPolyhedron, i: int) -> Face:
    """The face ``{x in P : a_i x = b_i}`` in generator form."""
    if not 0 <= i < P.m:
        raise IndexError(f"row {i} out of range for {P.m} rows")
    return _face_cached(P.A, P.b, P.n, i)


def is_facet(P: HPolyhedron, i: int) -> bool:
    """True iff row ``i`` defines a facet (a face of dimension ``dim P - 1``)."""
    G = double_description(P)
    if G.empty:
        return False
    F = face_of_row(P, i)
    return not F.empty and F.dimension() == G.dimension() - 1


def facet_rows(P: HPolyhedron) -> list[int]:
    """Indices of facet-defining rows; among identical facets only the first counts."""
    out = []
    seen = set()
    for i in range(P.m):
        if not is_facet(P, i):
            continue
        key = face_of_row(P, i).points, face_of_row(P, i).rays
        if key in seen:
            continue
        seen.add(key)
        out.append(i)
    return out


def facet_rel_interior_test(P: HPolyhedron, i: int, x: Sequence) -> bool:
    """True iff ``x`` lies in the relative interior of the facet defined by row ``i``.

    ``x`` must be tight on row ``i`` and strict on every row that is not
    constantly tight on the facet.
    """
    if not is_facet(P, i):
        raise NotFacetError(f"row {i} does not define a facet")
    s = P.slacks(x)
    if s[i] != 0 or any(v < 0 for v in s):
        return False
    implied = face_of_row(P, i).implicit_rows
    return all(v > 0 for j, v in enumerate(s) if j not in implied)


# -- vertex/inequality conversion and hull membership --------------------------


def vertices_to_hpolyhedron(points: Sequence[Sequence], rays: Sequence[Sequence] = ()) -> HPolyhedron:
    """Irredundant inequality description of ``conv(points) + cone(rays)``.

    Implicit equations come out as pairs of opposite inequalities.
    """
    if not points:
        raise ValueError("at least one point is required")
    n = len(points[0])
    # valid inequalities c x <= c0 form the cone {(c, c0) : c p - c0 <= 0, c r <= 0}
    rows = [(*vec(p), Fraction(-1)) for p in points] + [(*vec(r), Fraction(0)) for r in rays]
    crays, clin = cone_generators(rows, n + 1)
    A, b = [], []
    for g in crays:
        if any(g[:-1]):
            A.append(g[:-1])
            b.append(g[-1])
    for g in clin:
        A.append(g[:-1])
        b.append(g[-1])
        A.append(tuple(-c for c in g[:-1]))
        b.append(-g[-1])
    return HPolyhedron.from_rows(A, b, n)


def basic_solutions(M: Sequence[Sequence], c: Sequence, ncols: int, max_size: Optional[int] = None):
    """Yield ``(support, s)`` for every basic solution of ``M s = c, s >= 0``.

    Supports range over column subsets with linearly independent columns of
    size up to ``rank(M)`` (or ``max_size``); degenerate duplicates are
    suppressed by exact comparison.
    """
    cols = [tuple(row[j] for row in M) for j in range(ncols)]
    rk = rank(M) if M else 0
    top = rk if max_size is None else min(rk, max_size)
    seen = set()
    for k in range(0, top + 1):
        for J in combinations(range(ncols), k):
            sub_cols = [cols[j] for j in J]
            if k and rank(sub_cols) < k:
                continue
            if k == 0:
                if all(v == 0 for v in c):
                    s = zeros(ncols)
                else:
                    continue
            else:
                MJ = [tuple(row[j] for j in J) for row in M]
                sol = solve_linear(MJ, c, ncols=k).solution
                if sol is None or any(v < 0 for v in sol):
                    continue
                full = [Fraction(0)] * ncols
                for j, v in zip(J, sol):
                    full[j] = v
                s = tuple(full)
            if s not in seen:
                seen.add(s)
                yield J, s


def in_convex_hull(x: Sequence, points: Sequence[Sequence]) -> Optional[RatVec]:
    """Convex multipliers expressing ``x`` over ``points``, or ``None``.

    Exact: searches the basic feasible solutions of ``sum l_i p_i = x``,
    ``sum l_i = 1``, ``l >= 0``.
    """
    if not points:
        return None
    x = vec(x)
    M = [tuple(p[i] for p in points) for i in range(len(x))] + [tuple(Fraction(1) for _ in points)]
    c = (*x, Fraction(1))
    for _, lam in basic_solutions(M, c, len(points)):
        return lam
    return None


def affine_dimension(points: Sequence[Sequence]) -> int:
    if not points:
        return -1
    p0 = vec(points[0])
    return rank([sub(vec(p), p0) for p in points[1:]])


def combination(weights: Sequence, vectors: Sequence[Sequence]) -> RatVec:
    out = zeros(len(vectors[0]))
    for w, v in zip(weights, vectors):
        out = add(out, scale(w, v))
    return out


__all__ = [
    "HPolyhedron",
    "GeneratorForm",
    "Location",
    "Face",
    "cone_generators",
    "double_description",
    "recession_generators",
    "is_bounded",
    "is_empty",
    "dimension",
    "membership",
    "face_of_row",
    "is_facet",
    "facet_rows",
    "facet_rel_interior_test",
    "vertices_to_hpolyhedron",
    "basic_solutions",
    "in_convex_hull",
    "affine_dimension",
    "combination",
    "nullspace",
]
