"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (always stored reduced with a positive
denominator).  Vectors are tuples of fractions and matrices are tuples of row
tuples; both are immutable, so every function here is pure.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapacityError, DimensionError, InputError, SingularMatrixError

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

MINOR_MAX_ROWS = 32
MINOR_MAX_COLS = 8
FM_MAX_VARS = 8

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


# --------------------------------------------------------------------------
# scalars and serialization
# --------------------------------------------------------------------------

def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: nothing in this package is allowed to pass through
    binary floating point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise InputError(f"malformed rational: {value!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise InputError(f"zero denominator: {value!r}")
        return Fraction(num, den)
    raise InputError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vector(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(vector(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionError("ragged matrix")
    return m


def format_vector(v: Sequence[Fraction]) -> list[str]:
    return [format_rational(x) for x in v]


def format_matrix(m: Sequence[Sequence[Fraction]]) -> list[list[str]]:
    return [format_vector(r) for r in m]


# --------------------------------------------------------------------------
# basic vector / matrix operations
# --------------------------------------------------------------------------

def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dot of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def columns(m: Matrix) -> list[Vector]:
    return list(transpose(m))


def from_columns(cols: Sequence[Sequence[Fraction]]) -> Matrix:
    return transpose(tuple(tuple(c) for c in cols))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != shape(b)[0]:
        raise DimensionError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def matvec(a: Matrix, v: Sequence[Fraction]) -> Vector:
    return tuple(dot(row, v) for row in a)


def vecmat(v: Sequence[Fraction], a: Matrix) -> Vector:
    return tuple(dot(v, col) for col in transpose(a))


def sign_normalize(v: Vector) -> Vector:
    """Representative of ``{v, -v}`` whose first nonzero entry is positive."""
    for a in v:
        if a != 0:
            return v if a > 0 else neg(v)
    return v


# --------------------------------------------------------------------------
# determinants, rank, inverse, solving
# --------------------------------------------------------------------------

def det(m: Matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    n, c = shape(m)
    if n != c:
        raise DimensionError(f"determinant of non-square {n}x{c} matrix")
    if n == 0:
        return Fraction(1)
    # clear denominators so Bareiss runs over the integers
    lcm = 1
    for row in m:
        for x in row:
            d = x.denominator
            lcm = lcm * d // _gcd(lcm, d)
    a = [[int(x * lcm) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], lcm**n)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _row_reduce(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    a = [list(r) for r in m]
    rows, cols = shape(m)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Matrix) -> int:
    if not m:
        return 0
    return len(_row_reduce(m)[1])


def inverse(m: Matrix) -> Matrix:
    n, c = shape(m)
    if n != c:
        raise DimensionError(f"inverse of non-square {n}x{c} matrix")
    aug = tuple(row + ident for row, ident in zip(m, identity(n)))
    red, pivots = _row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def solve(m: Matrix, b: Sequence[Fraction]) -> Vector:
    """Unique solution of ``m x = b`` for square nonsingular ``m``."""
    return matvec(inverse(m), b)


def solve_in_span(cols: Sequence[Vector], x: Vector) -> Vector | None:
    """Coefficients expressing ``x`` in the independent ``cols``, or None."""
    if not cols:
        return () if is_zero(x) else None
    a = from_columns(cols)
    aug = tuple(row + (xi,) for row, xi in zip(a, x))
    red, pivots = _row_reduce(aug)
    k = len(cols)
    if k in pivots:
        return None
    if len(pivots) != k:
        raise SingularMatrixError("spanning vectors are dependent")
    return tuple(red[i][k] for i in range(k))


def nullspace(m: Matrix) -> list[Vector]:
    """A basis of ``{x : m x = 0}``."""
    rows, cols = shape(m)
    if rows == 0:
        return [tuple(identity(cols)[i]) for i in range(cols)]
    red, pivots = _row_reduce(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(tuple(v))
    return basis


# --------------------------------------------------------------------------
# minors
# --------------------------------------------------------------------------

def _check_minor_caps(m: Matrix, max_rows: int, max_cols: int) -> None:
    rows, cols = shape(m)
    if min(rows, cols) > max_cols or max(rows, cols) > max_rows:
        raise CapacityError(
            f"minor enumeration capped at {max_rows}x{max_cols}, got {rows}x{cols}"
        )


def iter_minors(m: Matrix, max_rows: int = MINOR_MAX_ROWS, max_cols: int = MINOR_MAX_COLS):
    """Yield the determinant of every square submatrix of ``m``."""
    _check_minor_caps(m, max_rows, max_cols)
    rows, cols = shape(m)
    for k in range(1, min(rows, cols) + 1):
        for ri in itertools.combinations(range(rows), k):
            sub_rows = [m[i] for i in ri]
            for ci in itertools.combinations(range(cols), k):
                yield det(tuple(tuple(r[j] for j in ci) for r in sub_rows))


def max_abs_minor(m: Matrix, max_rows: int = MINOR_MAX_ROWS, max_cols: int = MINOR_MAX_COLS) -> Fraction:
    return max((abs(d) for d in iter_minors(m, max_rows, max_cols)), default=Fraction(0))


def is_totally_unimodular(m: Matrix, max_rows: int = MINOR_MAX_ROWS, max_cols: int = MINOR_MAX_COLS) -> bool:
    return all(d in (-1, 0, 1) for d in iter_minors(m, max_rows, max_cols))


# --------------------------------------------------------------------------
# Fourier-Motzkin feasibility
# --------------------------------------------------------------------------

Constraint = tuple[Vector, Fraction]


@dataclass(frozen=True)
class LinearSystem:
    """Constraints ``coeffs . y <= bound`` over ``num_vars`` unknowns."""

    constraints: tuple[Constraint, ...]
    num_vars: int

    def __post_init__(self):
        for coeffs, _ in self.constraints:
            if len(coeffs) != self.num_vars:
                raise DimensionError(
                    f"constraint with {len(coeffs)} coefficients in a {self.num_vars}-variable system"
                )

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[Iterable, object]], num_vars: int) -> "LinearSystem":
        return cls(tuple((vector(c), to_rational(b)) for c, b in rows), num_vars)

    def satisfied_by(self, y: Sequence[Fraction]) -> bool:
        return all(dot(c, y) <= b for c, b in self.constraints)


@dataclass(frozen=True)
class EliminationStep:
    variable: int
    positive: int
    negative: int
    constraints_after: int


@dataclass(frozen=True)
class FMResult:
    """Outcome of :func:`fm_feasible`.

    ``witness`` is set when feasible; otherwise ``contradiction`` holds the
    derived constraint ``0 <= bound`` with ``bound < 0``.
    """

    feasible: bool
    witness: Vector | None = None
    steps: tuple[EliminationStep, ...] = ()
    contradiction: Fraction | None = None

    def certificate(self) -> dict:
        return {
            "eliminated": [
                {
                    "variable": s.variable,
                    "positive": s.positive,
                    "negative": s.negative,
                    "constraints_after": s.constraints_after,
                }
                for s in self.steps
            ],
            "contradiction": None
            if self.contradiction is None
            else f"0 <= {format_rational(self.contradiction)}",
        }


def _normalize(constraints: Iterable[Constraint]) -> tuple[dict[Vector, Fraction], Fraction | None]:
    """Scale rows so the first nonzero coefficient is +-1 and keep the tightest bound.

    Returns the deduplicated rows and, if some all-zero row has a negative
    bound, that bound (the system is then infeasible).
    """
    out: dict[Vector, Fraction] = {}
    worst = None
    for coeffs, bound in constraints:
        lead = next((a for a in coeffs if a != 0), None)
        if lead is None:
            if bound < 0 and (worst is None or bound < worst):
                worst = bound
            continue
        s = 1 / abs(lead)
        key = tuple(a * s for a in coeffs)
        b = bound * s
        if key not in out or b < out[key]:
            out[key] = b
    return out, worst


def fm_feasible(system: LinearSystem, max_vars: int = FM_MAX_VARS) -> FMResult:
    """Decide feasibility of ``system`` exactly by Fourier-Motzkin elimination.

    Eliminates the variable with the fewest positive x negative pairings
    (lowest index on ties), then back-substitutes to build a witness that
    satisfies every original constraint.
    """
    n = system.num_vars
    if n > max_vars:
        raise CapacityError(f"Fourier-Motzkin capped at {max_vars} variables, got {n}", n)

    current, bad = _normalize(system.constraints)
    if bad is not None:
        return FMResult(False, contradiction=bad)
    remaining = list(range(n))
    stages: list[tuple[int, dict[Vector, Fraction]]] = []
    steps: list[EliminationStep] = []

    while remaining:
        def pairings(j):
            pos = sum(1 for c in current if c[j] > 0)
            neg_ = sum(1 for c in current if c[j] < 0)
            return pos * neg_, pos, neg_

        var = min(remaining, key=lambda j: (pairings(j)[0], j))
        _, npos, nneg = pairings(var)
        pos = [(c, b) for c, b in current.items() if c[var] > 0]
        negs = [(c, b) for c, b in current.items() if c[var] < 0]
        new = [(c, b) for c, b in current.items() if c[var] == 0]
        for cp, bp in pos:
            sp = 1 / cp[var]
            for cn, bn in negs:
                sn = 1 / -cn[var]
                coeffs = tuple(sp * a + sn * b for a, b in zip(cp, cn))
                new.append((coeffs, sp * bp + sn * bn))
        stages.append((var, current))
        remaining.remove(var)
        current, bad = _normalize(new)
        steps.append(EliminationStep(var, npos, nneg, len(current)))
        if bad is not None:
            return FMResult(False, steps=tuple(steps), contradiction=bad)

    values = [Fraction(0)] * n
    for var, rows in reversed(stages):
        lo = hi = None
        for coeffs, bound in rows.items():
            a = coeffs[var]
            if a == 0:
                continue
            rest = bound - sum(
                (coeffs[j] * values[j] for j in range(n) if j != var and coeffs[j] != 0),
                Fraction(0),
            )
            lim = rest / a
            if a > 0:
                hi = lim if hi is None or lim < hi else hi
            else:
                lo = lim if lo is None or lim > lo else lo
        value = Fraction(0)
        if lo is not None and lo > value:
            value = lo
        if hi is not None and hi < value:
            value = hi
        values[var] = value

    witness = tuple(values)
    assert system.satisfied_by(witness), "back-substitution produced an infeasible point"
    return FMResult(True, witness=witness, steps=tuple(steps))
