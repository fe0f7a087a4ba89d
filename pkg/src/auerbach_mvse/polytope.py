"""Origin-symmetric polytopes, 2-D sections, parallelepipeds and zonotopes.

A :class:`SymPolytope` keeps its vertices and facet functionals up to sign:
``vertices`` holds one representative of each pair ``{v, -v}`` and
``facets`` one functional ``f`` per facet pair ``{f.x = 1, f.x = -1}``.
Representatives are sign-normalized (first nonzero coordinate positive) and
sorted, so two polytopes are equal as sets iff their reps are equal.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import exactlin as el
from .errors import DegeneratePolytopeError, DimensionError, SingularMatrixError
from .exactlin import Matrix, Vector

MAX_DIM = 6
MAX_PAIRS = 64


def _canonical_set(vs: Iterable[Vector]) -> tuple[Vector, ...]:
    return tuple(sorted({el.sign_normalize(v) for v in vs if not el.is_zero(v)}))


def _tight_rank(point_set: Sequence[Vector], f: Vector) -> int:
    tight = [v for v in point_set if abs(el.dot(f, v)) == 1]
    return el.rank(tuple(tight)) if tight else 0


class SymPolytope:
    """Origin-symmetric, full-dimensional convex polytope.

    Build with :meth:`from_vertices` or :meth:`from_facets`; the missing
    representation is computed on first access (once, under a lock).
    Vertex input may contain non-extreme points; they are dropped when the
    facet list is known.
    """

    def __init__(self, dim: int, vertices=None, facets=None):
        if vertices is None and facets is None:
            raise ValueError("a polytope needs vertices or facets")
        self.dim = dim
        self._vertices = None if vertices is None else _canonical_set(vertices)
        self._facets = None if facets is None else _canonical_set(facets)
        for v in (self._vertices or ()) + (self._facets or ()):
            if len(v) != dim:
                raise DimensionError(f"expected length-{dim} vectors, got {len(v)}")
        self._lock = threading.Lock()
        self._complete = vertices is not None and facets is not None

    @classmethod
    def from_vertices(cls, vertices: Iterable[Sequence], dim: int | None = None) -> "SymPolytope":
        vs = [el.vector(v) for v in vertices]
        if dim is None:
            if not vs:
                raise DegeneratePolytopeError("no vertices")
            dim = len(vs[0])
        return cls(dim, vertices=vs)

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence], dim: int | None = None) -> "SymPolytope":
        fs = [el.vector(f) for f in facets]
        if dim is None:
            if not fs:
                raise DegeneratePolytopeError("no facets")
            dim = len(fs[0])
        return cls(dim, facets=fs)

    def _complete_reps(self) -> None:
        with self._lock:
            if self._complete:
                return
            if self._facets is None:
                self._facets = _facets_from_vertices(self.dim, self._vertices)
            else:
                self._vertices = _vertices_from_facets(self.dim, self._facets)
            # drop non-extreme input points / redundant input functionals
            self._vertices = tuple(
                v for v in self._vertices if _tight_rank(self._facets, v) == self.dim
            )
            self._facets = tuple(
                f for f in self._facets if _tight_rank(self._vertices, f) == self.dim
            )
            self._complete = True

    @property
    def vertices(self) -> tuple[Vector, ...]:
        self._complete_reps()
        return self._vertices

    @property
    def facets(self) -> tuple[Vector, ...]:
        self._complete_reps()
        return self._facets

    def all_vertices(self) -> list[Vector]:
        return [s for v in self.vertices for s in (v, el.neg(v))]

    def same_set(self, other: "SymPolytope") -> bool:
        return self.dim == other.dim and self.vertices == other.vertices

    def __eq__(self, other):
        if not isinstance(other, SymPolytope):
            return NotImplemented
        return self.same_set(other)

    def __hash__(self):
        return hash((self.dim, self.vertices))

    def __repr__(self):
        return (
            f"SymPolytope(dim={self.dim}, vertex_pairs={len(self.vertices)}, "
            f"facet_pairs={len(self.facets)})"
        )

    def linear_image(self, t: Matrix) -> "SymPolytope":
        """Image under an invertible linear map ``x -> t x``."""
        t_inv = el.inverse(t)
        return SymPolytope(
            self.dim,
            vertices=[el.matvec(t, v) for v in self.vertices],
            facets=[el.vecmat(f, t_inv) for f in self.facets],
        )


def _check_size(dim: int, pairs: int) -> None:
    if dim > MAX_DIM:
        raise DimensionError(f"dimension {dim} exceeds {MAX_DIM}")
    if pairs > MAX_PAIRS:
        raise DimensionError(f"{pairs} pairs exceed {MAX_PAIRS}")


def _solve_sign_patterns(dim: int, reps: Sequence[Vector]):
    """Yield ``f`` with ``f . (s_i r_i) = 1`` for every independent dim-subset of
    ``reps`` and every sign pattern ``s`` (first sign fixed)."""
    for subset in itertools.combinations(reps, dim):
        try:
            inv = el.inverse(subset)
        except SingularMatrixError:
            continue
        # f = inv @ s, with s the sign vector
        for tail in itertools.product((1, -1), repeat=dim - 1):
            signs = (1,) + tail
            yield tuple(sum((row[j] * signs[j] for j in range(dim)), Fraction(0)) for row in inv)


def _facets_from_vertices(dim: int, vertices: Sequence[Vector]) -> tuple[Vector, ...]:
    _check_size(dim, len(vertices))
    if el.rank(tuple(vertices)) < dim:
        raise DegeneratePolytopeError("vertices do not span the space")
    found = set()
    for f in _solve_sign_patterns(dim, vertices):
        f = el.sign_normalize(f)
        if f in found:
            continue
        if all(abs(el.dot(f, v)) <= 1 for v in vertices):
            found.add(f)
    return tuple(sorted(found))


def _vertices_from_facets(dim: int, facets: Sequence[Vector]) -> tuple[Vector, ...]:
    _check_size(dim, len(facets))
    nonzero = [f for f in facets if not el.is_zero(f)]
    if not nonzero or el.rank(tuple(nonzero)) < dim:
        raise DegeneratePolytopeError("facet functionals do not bound a region")
    found = set()
    for v in _solve_sign_patterns(dim, nonzero):
        v = el.sign_normalize(v)
        if v in found:
            continue
        if all(abs(el.dot(f, v)) <= 1 for f in nonzero):
            found.add(v)
    return tuple(sorted(found))


def vrep_to_hrep(p: SymPolytope) -> SymPolytope:
    return SymPolytope(p.dim, vertices=p.vertices, facets=p.facets)


def hrep_to_vrep(p: SymPolytope) -> SymPolytope:
    return SymPolytope(p.dim, vertices=p.vertices, facets=p.facets)


def polar_dual(p: SymPolytope) -> SymPolytope:
    """Polar body: vertex and facet representations swap roles."""
    return SymPolytope(p.dim, vertices=p.facets, facets=p.vertices)


def gauge_norm(p: SymPolytope, x: Sequence[Fraction]) -> Fraction:
    if len(x) != p.dim:
        raise DimensionError(f"vector of length {len(x)} in a {p.dim}-dimensional space")
    return max(abs(el.dot(f, x)) for f in p.facets)


def dual_norm(p: SymPolytope, f: Sequence[Fraction]) -> Fraction:
    """Norm of the functional ``f`` relative to ``p``: max over vertices of ``|f.v|``."""
    if len(f) != p.dim:
        raise DimensionError(f"functional of length {len(f)} in a {p.dim}-dimensional space")
    return max(abs(el.dot(f, v)) for v in p.vertices)


# --------------------------------------------------------------------------
# 2-D sections
# --------------------------------------------------------------------------

def cross2(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def _half(v: Vector) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2 pi)
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def cyclic_order(points: Iterable[Vector]) -> list[Vector]:
    """Sort nonzero 2-D points counterclockwise by angle, starting from the
    positive x-axis, using only exact sign tests."""
    import functools

    def cmp(a, b):
        ha, hb = _half(a), _half(b)
        if ha != hb:
            return ha - hb
        c = cross2(a, b)
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(points, key=functools.cmp_to_key(cmp))


@dataclass(frozen=True)
class SectionPolygon:
    """Unit ball of ``span{x1, x2}`` in the coordinates ``(a1, a2) -> a1 x1 + a2 x2``."""

    x1: Vector
    x2: Vector
    verts2d: tuple[Vector, ...]

    def __post_init__(self):
        k = len(self.verts2d)
        if k < 4 or k % 2:
            raise ValueError(f"section with {k} vertices")
        for i in range(k):
            a, b = self.verts2d[i], self.verts2d[(i + 1) % k]
            if cross2(a, b) <= 0:
                raise ValueError("section vertices are not in strictly convex order")
        for i in range(k // 2):
            if self.verts2d[i + k // 2] != el.neg(self.verts2d[i]):
                raise ValueError("section is not centrally symmetric")

    def ambient(self, a: Vector) -> Vector:
        return el.add(el.scale(a[0], self.x1), el.scale(a[1], self.x2))


def halfplane_polygon(strips: Iterable[Vector]) -> list[Vector]:
    """Vertices, counterclockwise, of ``{a in R^2 : |g . a| <= 1 for all g}``."""
    gs = _canonical_set(strips)
    if len(gs) < 2:
        raise DegeneratePolytopeError("section is unbounded")
    pts = set()
    for g, h in itertools.combinations(gs, 2):
        d = cross2(g, h)
        if d == 0:
            continue
        for sg, sh in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            # solve g.a = sg, h.a = sh
            a = ((sg * h[1] - sh * g[1]) / d, (sh * g[0] - sg * h[0]) / d)
            if all(abs(el.dot(k, a)) <= 1 for k in gs):
                pts.add(a)
    ring = cyclic_order(pts)
    # drop points that are not strictly convex corners
    changed = True
    while changed and len(ring) > 2:
        changed = False
        k = len(ring)
        for i in range(k):
            p, q, r = ring[i - 1], ring[i], ring[(i + 1) % k]
            if cross2(el.sub(q, p), el.sub(r, q)) <= 0:
                del ring[i]
                changed = True
                break
    return ring


def section2(p: SymPolytope, x1: Sequence[Fraction], x2: Sequence[Fraction]) -> SectionPolygon:
    x1, x2 = el.vector(x1), el.vector(x2)
    if len(x1) != p.dim or len(x2) != p.dim:
        raise DimensionError("plane vectors do not match the polytope dimension")
    if el.rank((x1, x2)) < 2:
        raise DegeneratePolytopeError("section vectors are linearly dependent")
    strips = [(el.dot(f, x1), el.dot(f, x2)) for f in p.facets]
    ring = halfplane_polygon(s for s in strips if not el.is_zero(s))
    return SectionPolygon(x1, x2, tuple(ring))


# --------------------------------------------------------------------------
# parallelepipeds and zonotopes
# --------------------------------------------------------------------------

def minkowski_box(xs: Sequence[Sequence[Fraction]]) -> SymPolytope:
    """Parallelepiped ``sum [-x_i, x_i]`` for independent ``x_i``.

    Facets are the biorthogonal functionals (rows of the inverse of the
    matrix with columns ``x_i``).
    """
    cols = [el.vector(x) for x in xs]
    n = len(cols)
    if any(len(c) != n for c in cols):
        raise DimensionError("minkowski_box needs n vectors in R^n")
    k = el.from_columns(cols)
    try:
        funcs = el.inverse(k)
    except SingularMatrixError:
        raise DegeneratePolytopeError("box generators are linearly dependent") from None
    verts = []
    for tail in itertools.product((1, -1), repeat=n - 1):
        signs = (1,) + tail
        verts.append(tuple(sum((s * c[i] for s, c in zip(signs, cols)), Fraction(0)) for i in range(n)))
    return SymPolytope(n, vertices=verts, facets=list(funcs))


def box_volume(xs: Sequence[Sequence[Fraction]]) -> Fraction:
    return 2 ** len(xs) * abs(el.det(el.from_columns([el.vector(x) for x in xs])))


@dataclass(frozen=True)
class Zonotope:
    """``sum_k [-g_k, g_k]``; zero generators are dropped on construction."""

    dim: int
    generators: tuple[Vector, ...]

    def __init__(self, dim: int, generators: Iterable[Sequence]):
        gens = tuple(el.vector(g) for g in generators)
        if any(len(g) != dim for g in gens):
            raise DimensionError("generator of the wrong length")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", tuple(g for g in gens if not el.is_zero(g)))

    def merged_generators(self) -> tuple[Vector, ...]:
        """Parallel generators summed into one segment along their direction."""
        merged: list[Vector] = []
        for g in self.generators:
            for i, m in enumerate(merged):
                if el.rank((m, g)) == 1:
                    ratio = next(a / b for a, b in zip(g, m) if b != 0)
                    merged[i] = el.scale(1 + abs(ratio), m)
                    break
            else:
                merged.append(g)
        return tuple(merged)

    def facets(self) -> tuple[Vector, ...]:
        """Facet functionals: for each independent (dim-1)-subset of generators,
        its normal ``c`` scaled by the support value ``sum |c . g|``."""
        gens = self.merged_generators()
        n = self.dim
        if len(gens) < n or el.rank(gens) < n:
            raise DegeneratePolytopeError("zonotope is not full-dimensional")
        if n == 1:
            return (el.vector([1 / sum(abs(g[0]) for g in gens)]),)
        out = set()
        for subset in itertools.combinations(gens, n - 1):
            null = el.nullspace(subset)
            if len(null) != 1:
                continue
            c = null[0]
            h = sum((abs(el.dot(c, g)) for g in gens), Fraction(0))
            out.add(el.sign_normalize(el.scale(1 / h, c)))
        return tuple(sorted(out))

    def as_polytope(self) -> SymPolytope:
        return SymPolytope.from_facets(self.facets(), self.dim)

    def gauge(self, x: Sequence[Fraction]) -> Fraction:
        return max(abs(el.dot(f, x)) for f in self.facets())


def zonotope_volume(z: Zonotope) -> Fraction:
    total = Fraction(0)
    for subset in itertools.combinations(z.generators, z.dim):
        total += abs(el.det(el.from_columns(subset)))
    return 2**z.dim * total


def is_parallelepiped(z: Zonotope) -> bool:
    gens = z.merged_generators()
    return len(gens) == z.dim and el.rank(gens) == z.dim
