"""Biorthogonal systems and upper/lower Auerbach bases of polyhedral spaces.

Upper Auerbach bases maximize ``|det|`` over n-tuples of unit vectors.  The
determinant is linear in each argument, so the maximum is attained at
extreme points of the ball and we enumerate vertex tuples.  Lower Auerbach
bases are obtained by duality: the biorthogonal functionals of a lower basis
form an upper basis of the dual space.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import exactlin as el
from .errors import CapacityError, SingularMatrixError
from .exactlin import Matrix, Vector
from .polytope import SymPolytope, dual_norm, gauge_norm, polar_dual
from .spaces import PolyhedralSpace

DEFAULT_TUPLE_CAP = 10**6


def tuple_cap() -> int:
    raw = os.environ.get("MVSE_TUPLE_CAP")
    return int(raw) if raw else DEFAULT_TUPLE_CAP


@dataclass(frozen=True, eq=False)
class Basis:
    """Columns of ``vectors`` are the basis; rows of ``biorthogonal`` its functionals."""

    space: PolyhedralSpace
    vectors: Matrix
    biorthogonal: Matrix

    @property
    def columns(self) -> list[Vector]:
        return el.columns(self.vectors)

    @property
    def abs_det(self) -> Fraction:
        return abs(el.det(self.vectors))

    def key(self) -> tuple[Vector, ...]:
        return canonical_key(self.vectors)


def canonical_key(vectors: Matrix) -> tuple[Vector, ...]:
    """Column set up to order and signs."""
    return tuple(sorted(el.sign_normalize(c) for c in el.columns(vectors)))


def canonicalize(vectors: Matrix) -> Matrix:
    return el.from_columns(canonical_key(vectors))


def biorthogonal(space: PolyhedralSpace, vectors) -> Basis:
    vecs = el.matrix(vectors)
    try:
        funcs = el.inverse(vecs)
    except SingularMatrixError:
        raise SingularMatrixError("basis vectors are linearly dependent") from None
    return Basis(space, vecs, funcs)


def is_auerbach(b: Basis) -> bool:
    ball = b.space.ball
    if any(gauge_norm(ball, x) != 1 for x in b.columns):
        return False
    return all(dual_norm(ball, f) <= 1 for f in b.biorthogonal)


@dataclass(frozen=True, eq=False)
class AuerbachFamily:
    bases: tuple[Basis, ...]
    extremal_value: Fraction
    kind: str
    ties_flag: bool

    def keys(self) -> set[tuple[Vector, ...]]:
        return {b.key() for b in self.bases}

    def contains(self, vectors) -> bool:
        return canonical_key(el.matrix(vectors)) in self.keys()


def _max_det_tuples(points: tuple[Vector, ...], n: int) -> tuple[Fraction, list[tuple[Vector, ...]]]:
    count = comb(len(points), n)
    cap = tuple_cap()
    if count > cap:
        raise CapacityError(f"{count} vertex tuples exceed the cap of {cap}", count)
    best = Fraction(0)
    winners: list[tuple[Vector, ...]] = []
    for subset in itertools.combinations(points, n):
        d = abs(el.det(el.from_columns(subset)))
        if d > best:
            best, winners = d, [subset]
        elif d == best and d != 0:
            winners.append(subset)
    return best, winners


def _upper_from_ball(space: PolyhedralSpace, ball: SymPolytope) -> tuple[Fraction, list[Matrix]]:
    best, winners = _max_det_tuples(ball.vertices, ball.dim)
    mats = sorted({canonical_key(el.from_columns(w)) for w in winners})
    return best, [el.from_columns(k) for k in mats]


def upper_auerbach_bases(space: PolyhedralSpace) -> AuerbachFamily:
    best, mats = _upper_from_ball(space, space.ball)
    bases = tuple(biorthogonal(space, m) for m in mats)
    return AuerbachFamily(bases, best, "upper", len(bases) > 1)


def lower_auerbach_bases(space: PolyhedralSpace) -> AuerbachFamily:
    dual_ball = polar_dual(space.ball)
    dual_best, dual_mats = _upper_from_ball(space, dual_ball)
    keyed = {}
    for k_star in dual_mats:
        # columns of k_star are functionals; the primal basis is the inverse
        # of the matrix having them as rows
        k = canonicalize(el.inverse(el.transpose(k_star)))
        keyed[canonical_key(k)] = k
    bases = tuple(biorthogonal(space, keyed[key]) for key in sorted(keyed))
    return AuerbachFamily(bases, 1 / dual_best, "lower", len(bases) > 1)


def min_parallelepiped(space: PolyhedralSpace) -> tuple[Basis, Fraction]:
    fam = lower_auerbach_bases(space)
    b = fam.bases[0]
    return b, 2**space.dim * fam.extremal_value
