"""Constructors for polyhedral normed spaces.

Each space is stored in fixed coordinates as its unit ball.  ``source`` keeps
the canonical description the space was built from; the CLI serializes it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import exactlin as el
from .errors import DegeneratePolytopeError, DimensionError, InputError
from .exactlin import Matrix, Vector
from .polytope import MAX_DIM, SymPolytope

PROVENANCES = ("lp_ball", "linf_subspace", "l1_sum", "linf_sum", "hrep", "vrep", "hexagon", "sum_zero")


@dataclass(frozen=True)
class SubspaceEmbedding:
    """An n-dimensional subspace of l_inf^m given by an m x n basis matrix."""

    basis_matrix: Matrix

    @property
    def ambient_m(self) -> int:
        return len(self.basis_matrix)

    @property
    def n(self) -> int:
        return len(self.basis_matrix[0])

    def to_ambient(self, alpha: Sequence[Fraction]) -> Vector:
        return el.matvec(self.basis_matrix, alpha)

    def to_coords(self, x: Sequence[Fraction]) -> Vector:
        """Basis coordinates of an ambient vector lying in the subspace."""
        coords = el.solve_in_span(el.columns(self.basis_matrix), el.vector(x))
        if coords is None:
            raise DimensionError("vector is not in the subspace")
        return coords


@dataclass(frozen=True, eq=False)
class PolyhedralSpace:
    dim: int
    ball: SymPolytope
    name: str
    provenance: str
    source: dict[str, Any] = field(default_factory=dict)
    embedding: SubspaceEmbedding | None = None

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.ball.dim != self.dim:
            raise DimensionError("ball dimension does not match space dimension")

    def transformed(self, t: Matrix, name: str | None = None) -> "PolyhedralSpace":
        """The isometric copy ``T(X)``, with unit ball ``T(B_X)``."""
        ball = self.ball.linear_image(t)
        return PolyhedralSpace(
            self.dim,
            ball,
            name or f"T({self.name})",
            "vrep",
            {"kind": "vrep", "vertices": el.format_matrix(ball.vertices)},
        )


def describe(space: PolyhedralSpace) -> dict[str, Any]:
    """Serializable description: the construction recipe plus the name."""
    return {"name": space.name, **space.source}


def _check_dim(n: int) -> None:
    if not 1 <= n <= MAX_DIM:
        raise DimensionError(f"dimension must be in 1..{MAX_DIM}, got {n}")


def make_lp_ball(n: int, p, name: str | None = None) -> PolyhedralSpace:
    _check_dim(n)
    p_key = str(p).lower()
    if p_key in ("inf", "infinity", "oo"):
        facets = list(el.identity(n))
        ball = SymPolytope.from_facets(facets, n)
        return PolyhedralSpace(n, ball, name or f"l_inf^{n}", "lp_ball", {"kind": "lp_ball", "n": n, "p": "inf"})
    if p_key == "1":
        ball = SymPolytope.from_vertices(list(el.identity(n)), n)
        return PolyhedralSpace(n, ball, name or f"l_1^{n}", "lp_ball", {"kind": "lp_ball", "n": n, "p": "1"})
    raise InputError(f"unsupported p={p!r}; only 1 and inf are polyhedral")


def make_linf_subspace(emb: SubspaceEmbedding | Sequence[Sequence], name: str | None = None) -> PolyhedralSpace:
    """The column span of an m x n matrix inside l_inf^m, in basis coordinates.

    The norm of ``alpha`` is ``max_j |row_j . alpha|``; redundant rows stay in
    the embedding but not in the canonical facet list.
    """
    if not isinstance(emb, SubspaceEmbedding):
        emb = SubspaceEmbedding(el.matrix(emb))
    b = emb.basis_matrix
    n = emb.n
    _check_dim(n)
    if el.rank(b) != n:
        raise DegeneratePolytopeError("embedding matrix is rank deficient")
    ball = SymPolytope.from_facets(list(b), n)
    return PolyhedralSpace(
        n,
        ball,
        name or f"subspace of l_inf^{emb.ambient_m}",
        "linf_subspace",
        {"kind": "linf_subspace", "matrix": el.format_matrix(b)},
        emb,
    )


def sum_zero_space(name: str | None = None) -> PolyhedralSpace:
    """``{x in l_inf^4 : x1 + x2 + x3 + x4 = 0}`` with basis e_i - e_4."""
    m = el.matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]])
    s = make_linf_subspace(m)
    return PolyhedralSpace(s.dim, s.ball, name or "sum-zero subspace of l_inf^4", "sum_zero", {"kind": "sum_zero"}, s.embedding)


def make_hrep_space(facets: Sequence[Sequence], name: str = "hrep space") -> PolyhedralSpace:
    fs = el.matrix(facets)
    n = len(fs[0])
    _check_dim(n)
    ball = SymPolytope.from_facets(fs, n)
    ball.vertices  # validate boundedness eagerly
    return PolyhedralSpace(n, ball, name, "hrep", {"kind": "hrep", "facets": el.format_matrix(fs)})


def make_vrep_space(vertices: Sequence[Sequence], name: str = "vrep space") -> PolyhedralSpace:
    vs = el.matrix(vertices)
    n = len(vs[0])
    _check_dim(n)
    ball = SymPolytope.from_vertices(vs, n)
    ball.facets
    return PolyhedralSpace(n, ball, name, "vrep", {"kind": "vrep", "vertices": el.format_matrix(vs)})


def _pad(v: Vector, before: int, after: int) -> Vector:
    zero = Fraction(0)
    return (zero,) * before + tuple(v) + (zero,) * after


def make_l1_sum(a: PolyhedralSpace, b: PolyhedralSpace, name: str | None = None) -> PolyhedralSpace:
    n = a.dim + b.dim
    _check_dim(n)
    verts = [_pad(v, 0, b.dim) for v in a.ball.vertices] + [_pad(w, a.dim, 0) for w in b.ball.vertices]
    ball = SymPolytope.from_vertices(verts, n)
    return PolyhedralSpace(
        n, ball, name or f"({a.name}) (+)_1 ({b.name})", "l1_sum",
        {"kind": "l1_sum", "left": describe(a), "right": describe(b)},
    )


def make_linf_sum(a: PolyhedralSpace, b: PolyhedralSpace, name: str | None = None) -> PolyhedralSpace:
    n = a.dim + b.dim
    _check_dim(n)
    facets = [_pad(f, 0, b.dim) for f in a.ball.facets] + [_pad(g, a.dim, 0) for g in b.ball.facets]
    ball = SymPolytope.from_facets(facets, n)
    return PolyhedralSpace(
        n, ball, name or f"({a.name}) (+)_inf ({b.name})", "linf_sum",
        {"kind": "linf_sum", "left": describe(a), "right": describe(b)},
    )


def rational_hexagon_space(name: str | None = None) -> PolyhedralSpace:
    """Plane whose unit ball is the hexagon with vertices +-(1,0), +-(1,1), +-(0,1).

    It is linearly equivalent to the regular hexagon, which is all the
    decision procedures can see.
    """
    ball = SymPolytope.from_vertices([(1, 0), (1, 1), (0, 1)], 2)
    return PolyhedralSpace(2, ball, name or "hexagon", "hexagon", {"kind": "hexagon"})


def hadamard_matrix(n: int) -> Matrix:
    """Sylvester Hadamard matrix of order 1, 2, 4 or 8."""
    if n not in (1, 2, 4, 8):
        raise InputError(f"Sylvester construction only for n in 1, 2, 4, 8; got {n}")
    h = [[1]]
    while len(h) < n:
        h = [r + r for r in h] + [r + [-x for x in r] for r in h]
    return el.matrix(h)
