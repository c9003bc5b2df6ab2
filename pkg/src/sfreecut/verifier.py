"""Brute-force validity oracle.

For every point ``x`` of S in the box, the set ``{s >= 0 : R s = x - f}`` is
pointed, so the minimum of ``sum_j psi(r^j) s_j`` over it is attained at a
basic solution. Enumerating all bases (column subsets of size at most n with
independent columns) therefore finds it exactly; extreme rays of
``{s >= 0 : R s = 0}`` expose unboundedness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .cutgen import TableauInstance
from .errors import DimensionError, PreconditionError
from .gauge import GaugeFunction, gauge_eval
from .lattice import SearchBox
from .linalg import dot, nullspace, rank, sub
from .polyhedron import basic_solutions


@dataclass(frozen=True)
class ValidityReport:
    minimum_value: Optional[Fraction]
    attained_at: Optional[tuple]  # (S-point, s-vector)
    unbounded_below: bool
    ray_witness: Optional[tuple]
    points_checked: int
    unreachable_points: int
    box_used: SearchBox

    @property
    def valid(self) -> bool:
        if self.unbounded_below:
            return False
        return self.minimum_value is None or self.minimum_value >= 1


def _negative_extreme_ray(columns, costs, n):
    """An extreme ray ``s`` of ``{s >= 0 : R s = 0}`` with ``costs . s < 0``, if any."""
    m = len(columns)
    for k in range(1, min(m, n + 1) + 1):
        for J in combinations(range(m), k):
            cols = [columns[j] for j in J]
            if rank(cols) != k - 1:
                continue
            # columns as rows of the transposed system: find l with sum_j l_j col_j = 0
            basis = nullspace([tuple(c[i] for c in cols) for i in range(n)], k)
            if len(basis) != 1:
                continue
            v = basis[0]
            if all(t < 0 for t in v):
                v = tuple(-t for t in v)
            if not all(t > 0 for t in v):
                continue
            s = [Fraction(0)] * m
            for j, t in zip(J, v):
                s[j] = t
            if dot(costs, s) < 0:
                return tuple(s)
    return None


def verify_validity(psi: GaugeFunction, inst: TableauInstance, box: SearchBox) -> ValidityReport:
    """Check ``sum_j psi(r^j) s_j >= 1`` on every point of S in ``box`` reachable from ``f``."""
    if box is None:
        raise PreconditionError("a search box is required")
    if psi.n != inst.n or box.n != inst.n:
        raise DimensionError("gauge, instance and box must share one dimension")
    if not inst.rays:
        raise PreconditionError("at least one ray is required")
    n, m = inst.n, len(inst.rays)
    costs = tuple(gauge_eval(psi, r) for r in inst.rays)
    R = [tuple(r[i] for r in inst.rays) for i in range(n)]

    best = None
    checked = unreachable = 0
    for x in inst.S.points(box):
        checked += 1
        v = sub(x, inst.f)
        local = None
        for _, s in basic_solutions(R, v, m, max_size=n):
            val = dot(costs, s)
            if local is None or (val, s) < local:
                local = (val, s)
        if local is None:
            unreachable += 1
            continue
        if best is None or local[0] < best[0]:
            best = (local[0], x, local[1])

    ray = _negative_extreme_ray(inst.rays, costs, n) if best is not None else None
    return ValidityReport(
        minimum_value=None if best is None else best[0],
        attained_at=None if best is None else (best[1], best[2]),
        unbounded_below=ray is not None,
        ray_witness=ray,
        points_checked=checked,
        unreachable_points=unreachable,
        box_used=box,
    )


__all__ = ["ValidityReport", "verify_validity"]
