"""Cuts for the tableau model ``x = f + sum_j r^j s_j, x in S, s >= 0``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DimensionError, NotSFreeError, PreconditionError
from .gauge import GaugeFunction, gauge_eval
from .lattice import SDescription, SearchBox, default_box
from .linalg import RatVec, is_integral, vec
from .sfree import MaximalityReport, SFreeBody, is_s_free, tilt_to_maximal


@dataclass(frozen=True)
class TableauInstance:
    f: RatVec
    rays: tuple
    S: SDescription

    def __post_init__(self):
        f = vec(self.f)
        rays = tuple(vec(r) for r in self.rays)
        if len(f) != self.S.n:
            raise DimensionError("f and S differ in dimension")
        if not rays:
            raise PreconditionError("at least one ray is required")
        if any(len(r) != len(f) for r in rays):
            raise DimensionError("rays and f differ in dimension")
        if is_integral(f):
            raise PreconditionError("f must not be an integer point")
        if not self.S.Q.contains(f):
            raise PreconditionError("f must lie in Q")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "rays", rays)

    @property
    def n(self) -> int:
        return len(self.f)


@dataclass(frozen=True)
class CutResult:
    coefficients: tuple
    body: SFreeBody
    maximality: MaximalityReport
    trace: tuple

    @property
    def gauge(self) -> GaugeFunction:
        return GaugeFunction.of_body(self.body)


def default_initial_body(inst: TableauInstance) -> SFreeBody:
    """Split ``floor(f_i) <= x_i <= ceil(f_i)`` on the first fractional coordinate."""
    i = next(k for k, v in enumerate(inst.f) if v.denominator != 1)
    fi = inst.f[i]
    lo, hi = math.floor(fi), math.ceil(fi)
    up = [Fraction(0)] * inst.n
    down = [Fraction(0)] * inst.n
    up[i] = 1 / (hi - fi)
    down[i] = -1 / (fi - lo)
    return SFreeBody(inst.f, (tuple(up), tuple(down)))


def generate_cut(inst: TableauInstance, initial: Optional[SFreeBody] = None,
                 box: Optional[SearchBox] = None) -> CutResult:
    """Tilt the initial body to a maximal one and evaluate its gauge on the rays.

    With a ``maximal-case-i`` verdict, ``sum_j coefficients[j] * s_j >= 1`` is a
    minimal valid inequality as far as the box certifies.
    """
    body = default_initial_body(inst) if initial is None else initial
    if body.f != inst.f:
        raise PreconditionError("initial body is anchored away from f")
    if box is None:
        box = default_box(body.to_hpolyhedron().intersect(inst.S.Q), inst.n)
    check = is_s_free(body, inst.S, box)
    if not check.free:
        raise NotSFreeError("initial body is not S-free", check.witness)
    tilted = tilt_to_maximal(body, inst.S, box)
    psi = GaugeFunction.of_body(tilted.body)
    coeffs = tuple(gauge_eval(psi, r) for r in inst.rays)
    return CutResult(coeffs, tilted.body, tilted.report, tilted.trace)


__all__ = ["TableauInstance", "CutResult", "default_initial_body", "generate_cut"]
