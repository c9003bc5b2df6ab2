"""Exact rational vectors and matrices.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions and
matrices are tuples of row vectors. Nothing in here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Integral
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DimensionError

Rat = Fraction
RatVec = tuple  # tuple[Fraction, ...]
RatMat = tuple  # tuple[RatVec, ...]


def rat(x) -> Fraction:
    """Coerce ``x`` to a Fraction; strings like ``"3/4"`` are accepted, floats are not."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Integral):
        return Fraction(int(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse rational {x!r}") from exc
    raise TypeError(f"expected int, str or Fraction, got {type(x).__name__}")


def vec(xs: Iterable) -> RatVec:
    return tuple(rat(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> RatMat:
    return tuple(vec(r) for r in rows)


def zeros(n: int) -> RatVec:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> RatVec:
    return tuple(Fraction(int(j == i)) for j in range(n))


def _check(u, v):
    if len(u) != len(v):
        raise DimensionError(f"dimension mismatch: {len(u)} vs {len(v)}")


def dot(u: Sequence, v: Sequence) -> Fraction:
    _check(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> RatVec:
    _check(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> RatVec:
    _check(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence) -> RatVec:
    c = rat(c)
    return tuple(c * a for a in u)


def combine(lam, u: Sequence, v: Sequence) -> RatVec:
    """``lam * u + (1 - lam) * v``."""
    lam = rat(lam)
    return add(scale(lam, u), scale(1 - lam, v))


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def is_integral(u: Sequence) -> bool:
    return all(Fraction(a).denominator == 1 for a in u)


def primitive(u: Sequence) -> RatVec:
    """Positive multiple of ``u`` with coprime integer entries (zero stays zero)."""
    u = vec(u)
    if is_zero(u):
        return u
    den = lcm(*(a.denominator for a in u))
    ints = [int(a * den) for a in u]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return tuple(Fraction(a // g) for a in ints)


def matvec(M: Sequence[Sequence], x: Sequence) -> RatVec:
    return tuple(dot(row, x) for row in M)


def transpose(M: Sequence[Sequence], ncols: Optional[int] = None) -> RatMat:
    if not M:
        return tuple(() for _ in range(ncols or 0))
    return tuple(tuple(row[j] for row in M) for j in range(len(M[0])))


def _integer_rows(rows):
    out = []
    for row in rows:
        den = lcm(1, *(Fraction(a).denominator for a in row)) if row else 1
        out.append([int(Fraction(a) * den) for a in row])
    return out


def _bareiss(M: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form in place; returns (M, pivot columns)."""
    m = len(M)
    ncols = len(M[0]) if m else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        for i in range(r + 1, m):
            mic = M[i][c]
            row_i = M[i]
            row_r = M[r]
            for j in range(c + 1, ncols):
                q, rem = divmod(piv * row_i[j] - mic * row_r[j], prev)
                assert rem == 0, "Bareiss division must be exact"
                row_i[j] = q
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return M, pivots


def rank(rows: Sequence[Sequence]) -> int:
    rows = [r for r in rows if r]
    if not rows:
        return 0
    _, pivots = _bareiss(_integer_rows(rows))
    return len(pivots)


class LinearSolution(NamedTuple):
    solution: Optional[RatVec]
    rank: int

    @property
    def consistent(self) -> bool:
        return self.solution is not None


def solve_linear(M: Sequence[Sequence], v: Sequence, ncols: Optional[int] = None) -> LinearSolution:
    """Solve ``M x = v`` exactly.

    Returns a particular solution (free variables set to zero) together with
    ``rank(M)``, or ``solution=None`` if the system is inconsistent.
    """
    if ncols is None:
        if not M:
            raise DimensionError("ncols required for a matrix without rows")
        ncols = len(M[0])
    if len(M) != len(v):
        raise DimensionError(f"{len(M)} rows but right-hand side of length {len(v)}")
    for row in M:
        if len(row) != ncols:
            raise DimensionError(f"row of length {len(row)} in a matrix with {ncols} columns")
    if not M:
        return LinearSolution(zeros(ncols), 0)
    aug = _integer_rows([list(row) + [v_i] for row, v_i in zip(M, v)])
    E, pivots = _bareiss(aug)
    rk = len([c for c in pivots if c < ncols])
    if ncols in pivots:
        return LinearSolution(None, rk)
    x = [Fraction(0)] * ncols
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        acc = Fraction(E[r][ncols])
        for j in range(c + 1, ncols):
            if E[r][j]:
                acc -= E[r][j] * x[j]
        x[c] = acc / E[r][c]
    return LinearSolution(tuple(x), rk)


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals (zero rows removed)."""
    M = [[Fraction(a) for a in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [a * inv for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                fac = M[i][c]
                M[i] = [a - fac * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[RatVec]:
    """Basis of ``{x : rows x = 0}`` as primitive integer vectors."""
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -R[r][fc]
        basis.append(primitive(x))
    return basis


def row_space_basis(rows: Sequence[Sequence], ncols: int) -> list[RatVec]:
    """Canonical basis (primitive RREF rows) of the span of ``rows``."""
    R, _ = rref(rows, ncols)
    return [primitive(r) for r in R]


def project_out(v: Sequence, basis: Sequence[Sequence]) -> RatVec:
    """Orthogonal projection of ``v`` onto the complement of ``span(basis)``."""
    if not basis:
        return vec(v)
    G = [[dot(a, b) for b in basis] for a in basis]
    rhs = [dot(a, v) for a in basis]
    coeffs = solve_linear(G, rhs, ncols=len(basis)).solution
    out = vec(v)
    for c, b in zip(coeffs, basis):
        out = sub(out, scale(c, b))
    return out
