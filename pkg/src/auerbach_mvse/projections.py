"""Norms of projections in polyhedral spaces and exact 1-complementedness tests.

A projection onto ``H = span(h_1..h_k)`` is fixed by a complement basis
``u_1..u_r`` and the images ``P(u_j)`` in ``H``.  Writing
``v = sum a_i h_i + sum t_j u_j`` gives ``P(v) = sum a_i h_i + sum t_j P(u_j)``,
which is linear in the unknown coordinates of the ``P(u_j)``.  ``||P|| <= 1``
is therefore a finite set of linear inequalities (one pair per ball vertex
and facet), decided exactly by Fourier-Motzkin.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exactlin as el
from .errors import CapacityError, DimensionError
from .exactlin import LinearSystem, Vector
from .polytope import gauge_norm
from .spaces import PolyhedralSpace

NORM_ONE_EXISTS = "norm_one_exists"
NOT_ONE_COMPLEMENTED = "not_one_complemented"


@dataclass(frozen=True, eq=False)
class ProjectionSpec:
    space: PolyhedralSpace
    subspace_basis: tuple[Vector, ...]
    complement_basis: tuple[Vector, ...]
    images: tuple[Vector, ...]

    def __post_init__(self):
        n = self.space.dim
        h, u = self.subspace_basis, self.complement_basis
        if len(h) + len(u) != n or len(self.images) != len(u):
            raise DimensionError("subspace and complement bases do not split the space")
        if el.rank(tuple(h) + tuple(u)) != n:
            raise DimensionError("subspace and complement bases are not jointly a basis")
        for img in self.images:
            if el.solve_in_span(list(h), img) is None:
                raise DimensionError("projection image lies outside the subspace")

    def apply(self, x: Sequence[Fraction]) -> Vector:
        coeffs = el.solve(el.from_columns(self.subspace_basis + self.complement_basis), el.vector(x))
        k = len(self.subspace_basis)
        out = tuple(Fraction(0) for _ in range(self.space.dim))
        for a, h in zip(coeffs[:k], self.subspace_basis):
            out = el.add(out, el.scale(a, h))
        for t, img in zip(coeffs[k:], self.images):
            out = el.add(out, el.scale(t, img))
        return out

    def to_dict(self) -> dict:
        return {
            "subspace_basis": el.format_matrix(self.subspace_basis),
            "complement_basis": el.format_matrix(self.complement_basis),
            "images": el.format_matrix(self.images),
        }


def operator_norm(p: ProjectionSpec) -> Fraction:
    ball = p.space.ball
    return max(gauge_norm(ball, p.apply(v)) for v in ball.vertices)


def extend_to_basis(vectors: Sequence[Vector], n: int) -> tuple[Vector, ...]:
    """Standard basis vectors (lowest index first) completing ``vectors``."""
    chosen = list(vectors)
    extra = []
    for e in el.identity(n):
        if len(chosen) == n:
            break
        if el.rank(tuple(chosen + [e])) > len(chosen):
            chosen.append(e)
            extra.append(e)
    return tuple(extra)


@dataclass(frozen=True, eq=False)
class ComplementednessReport:
    answer: str
    witness: ProjectionSpec | None = None
    certificate: dict | None = None

    def to_dict(self) -> dict:
        return {
            "answer": self.answer,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "operator_norm": None
            if self.witness is None
            else el.format_rational(operator_norm(self.witness)),
            "certificate": self.certificate,
        }


def norm_one_system(space: PolyhedralSpace, h: Sequence[Vector], u: Sequence[Vector]) -> LinearSystem:
    """Constraints on the unknowns ``c[j*k + i]`` (``P(u_j) = sum_i c_ji h_i``)
    equivalent to ``|f(P(v))| <= 1`` for every ball vertex ``v`` and facet ``f``."""
    k, r = len(h), len(u)
    frame = el.from_columns(list(h) + list(u))
    rows = []
    for v in space.ball.vertices:
        coeffs = el.solve(frame, v)
        a, t = coeffs[:k], coeffs[k:]
        hv = tuple(sum((ai * hi[d] for ai, hi in zip(a, h)), Fraction(0)) for d in range(space.dim))
        for f in space.ball.facets:
            fh = [el.dot(f, hi) for hi in h]
            lin = tuple(t[j] * fh[i] for j in range(r) for i in range(k))
            const = el.dot(f, hv)
            rows.append((lin, 1 - const))
            rows.append((el.neg(lin), 1 + const))
    return LinearSystem(tuple(rows), k * r)


def exists_norm_one_projection(space: PolyhedralSpace, subspace_basis: Sequence[Sequence]) -> ComplementednessReport:
    h = tuple(el.vector(x) for x in subspace_basis)
    n = space.dim
    if any(len(x) != n for x in h):
        raise DimensionError("subspace vectors do not match the space dimension")
    if el.rank(h) != len(h):
        raise DimensionError("subspace vectors are linearly dependent")
    u = extend_to_basis(h, n)
    k, r = len(h), len(u)
    if k * r > el.FM_MAX_VARS:
        raise CapacityError(f"{k * r} unknowns exceed the Fourier-Motzkin cap of {el.FM_MAX_VARS}", k * r)
    result = el.fm_feasible(norm_one_system(space, h, u))
    if not result.feasible:
        return ComplementednessReport(NOT_ONE_COMPLEMENTED, certificate=result.certificate())
    c = result.witness
    images = []
    for j in range(r):
        img = tuple(Fraction(0) for _ in range(n))
        for i in range(k):
            img = el.add(img, el.scale(c[j * k + i], h[i]))
        images.append(img)
    spec = ProjectionSpec(space, h, u, tuple(images))
    norm = operator_norm(spec)
    if norm != 1:
        raise AssertionError(f"LP witness has operator norm {norm}, expected 1")
    return ComplementednessReport(NORM_ONE_EXISTS, spec, result.certificate())


def hexagonal_subspace_candidates(space: PolyhedralSpace) -> list[tuple[Vector, Vector]]:
    """Pairs of support-2 vectors of the sum-zero subspace with intersecting
    supports, as basis coordinates.

    Support-2 vectors of ``{x1+x2+x3+x4 = 0}`` are ``e_i - e_j`` up to sign;
    there are 12 unordered pairs of them sharing an index, spanning the four
    subspaces ``{x : x_l = 0}``.
    """
    emb = space.embedding
    if emb is None or emb.ambient_m != 4 or emb.n != 3:
        raise DimensionError("hexagonal_subspace_candidates expects the sum-zero subspace of l_inf^4")
    diffs = []
    for i, j in itertools.combinations(range(4), 2):
        x = [0] * 4
        x[i], x[j] = 1, -1
        diffs.append(((i, j), el.vector(x)))
    out = []
    for (s1, x1), (s2, x2) in itertools.combinations(diffs, 2):
        if set(s1) & set(s2):
            out.append((emb.to_coords(x1), emb.to_coords(x2)))
    return out
