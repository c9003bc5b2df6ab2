"""Seeded random tableau instances for sweeps."""

import math
import random
from fractions import Fraction

from sfreecut import SDescription, SearchBox, TableauInstance

BOX = SearchBox.cube(2, 5)


def _fractional(rng):
    den = rng.choice([2, 3, 4, 5])
    return Fraction(rng.randint(-2 * den, 2 * den), den)


def random_instance(rng: random.Random) -> TableauInstance:
    while True:
        f = (_fractional(rng), _fractional(rng))
        if all(v.denominator == 1 for v in f):
            continue
        A, b = [], []
        for _ in range(rng.randint(0, 3)):
            a = (rng.randint(-2, 2), rng.randint(-2, 2))
            if a == (0, 0):
                continue
            A.append(a)
            b.append(math.ceil(a[0] * f[0] + a[1] * f[1]) + rng.randint(0, 2))
        S = SDescription.from_rows(A, b, 2)
        if len(S.points(BOX)) < 3 or not S.is_full_dimensional(BOX):
            continue
        rays = []
        while len(rays) < rng.randint(2, 4):
            r = (Fraction(rng.randint(-3, 3), rng.randint(1, 3)), Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
            if r != (0, 0):
                rays.append(r)
        return TableauInstance(f, rays, S)


def sweep(seed=20240531, count=50):
    rng = random.Random(seed)
    return [random_instance(rng) for _ in range(count)]


def random_initial_body(inst: TableauInstance, rng: random.Random):
    """A bounded S-free body around ``f``, usually far from maximal."""
    from sfreecut import SFreeBody, is_s_free
    from sfreecut.polyhedron import is_bounded

    while True:
        rows = set()
        while len(rows) < rng.randint(3, 4):
            a = (rng.randint(-3, 3), rng.randint(-3, 3))
            if a != (0, 0):
                rows.add(tuple(c * rng.randint(1, 3) for c in a))
        B = SFreeBody(inst.f, sorted(rows))
        if is_bounded(B.to_hpolyhedron()) and is_s_free(B, inst.S, BOX).free:
            return B


def sweep_with_bodies(seed=20240531, count=50):
    """Even entries start from the default split, odd ones from a random bounded body."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        inst = random_instance(rng)
        out.append((inst, random_initial_body(inst, rng) if k % 2 else None))
    return out
