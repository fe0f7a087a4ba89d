"""Deciding whether a polyhedral space has a non-parallelepipedal MVSE, and
constructing the zonotope that witnesses it.

The decision scans lower Auerbach bases for a pair of basis vectors whose
span has a hexagonal unit ball that is an affine image of the regular
hexagon.  The construction embeds the space in l_inf^m through the
biorthogonal functionals and the dual extreme points, normalizes the
hexagonal pair so that some row reads (+-1, +-1), and projects the cube
along the orthogonal complement of a sparsified copy of the embedding matrix.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exactlin as el
from .auerbach import Basis, lower_auerbach_bases
from .errors import InvalidWitnessError
from .exactlin import Matrix, Vector
from .polytope import (
    SectionPolygon,
    Zonotope,
    cross2,
    is_parallelepiped,
    section2,
    zonotope_volume,
)
from .spaces import PolyhedralSpace

log = logging.getLogger(__name__)

PARALLELEPIPED_ONLY = "parallelepiped_only"
NON_PARALLELEPIPEDAL = "non_parallelepipedal"


def hexagon_regular_equiv(s: SectionPolygon) -> tuple[Vector, Vector, Vector] | None:
    """Return ``(p1, p2, p3)`` if the section is a hexagon ``+-p1, +-p2, +-p3``
    (in cyclic order) affinely equivalent to the regular one.

    For a centrally symmetric hexagon this is exactly the condition that the
    three parallelograms spanned by pairs of the triple have equal area.
    """
    if len(s.verts2d) != 6:
        return None
    p1, p2, p3 = s.verts2d[:3]
    a12, a23, a13 = abs(cross2(p1, p2)), abs(cross2(p2, p3)), abs(cross2(p1, p3))
    if a12 == a23 == a13 != 0:
        return p1, p2, p3
    return None


@dataclass(frozen=True, eq=False)
class HexagonWitness:
    p1: Vector
    p2: Vector
    p3: Vector
    basis_pair: tuple[int, int]
    basis: Basis

    def to_dict(self) -> dict:
        return {
            "basis": el.format_matrix(self.basis.vectors),
            "pair": list(self.basis_pair),
            "triple": [el.format_vector(p) for p in (self.p1, self.p2, self.p3)],
        }


@dataclass(frozen=True, eq=False)
class DecisionReport:
    space_name: str
    answer: str
    witness: HexagonWitness | None
    lower_families_examined: int
    min_parallelepiped_volume: Fraction
    ties_flag: bool

    def __post_init__(self):
        if self.answer == NON_PARALLELEPIPEDAL and self.witness is None:
            raise ValueError("a non-parallelepipedal answer needs a witness")

    def to_dict(self) -> dict:
        return {
            "space": self.space_name,
            "answer": self.answer,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "lower_families_examined": self.lower_families_examined,
            "min_parallelepiped_volume": el.format_rational(self.min_parallelepiped_volume),
            "ties_flag": self.ties_flag,
            "search": "vertex-supported" if self.ties_flag else "complete",
        }


def find_hexagonal_pair(space: PolyhedralSpace, basis: Basis) -> HexagonWitness | None:
    cols = basis.columns
    for i, j in itertools.combinations(range(len(cols)), 2):
        triple = hexagon_regular_equiv(section2(space.ball, cols[i], cols[j]))
        if triple is not None:
            return HexagonWitness(*triple, (i, j), basis)
    return None


def decide(space: PolyhedralSpace) -> DecisionReport:
    fam = lower_auerbach_bases(space)
    volume = 2**space.dim * fam.extremal_value
    witness = None
    examined = 0
    if space.dim >= 2:
        for basis in fam.bases:
            examined += 1
            witness = find_hexagonal_pair(space, basis)
            if witness is not None:
                break
    answer = NON_PARALLELEPIPEDAL if witness else PARALLELEPIPED_ONLY
    return DecisionReport(space.name, answer, witness, examined, volume, fam.ties_flag)


# --------------------------------------------------------------------------
# construction
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MvseChecks:
    contains_ball: bool
    volume_matches: bool
    tu_certified: bool
    not_parallelepiped: bool

    @property
    def all_passed(self) -> bool:
        return self.contains_ball and self.volume_matches and self.tu_certified and self.not_parallelepiped

    def failed(self) -> list[str]:
        return [k for k, v in self.__dict__.items() if not v]

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True, eq=False)
class MvseCandidate:
    zonotope: Zonotope
    generator_matrix: Matrix
    checks: MvseChecks
    embedding: Matrix | None = None
    kernel_matrix: Matrix | None = None
    case: str | None = None

    def to_dict(self) -> dict:
        out = {
            "generators": el.format_matrix(self.zonotope.generators),
            "generator_matrix": el.format_matrix(self.generator_matrix),
            "volume": el.format_rational(zonotope_volume(self.zonotope)),
            "checks": self.checks.to_dict(),
            "all_checks_passed": self.checks.all_passed,
        }
        if self.case is not None:
            out["case"] = self.case
        if self.embedding is not None:
            out["embedding"] = el.format_matrix(self.embedding)
            out["kernel_matrix"] = el.format_matrix(self.kernel_matrix)
        return out


def _check_witness(space: PolyhedralSpace, w: HexagonWitness) -> None:
    if w.basis.space is not space:
        fam_keys = lower_auerbach_bases(space).keys()
        if w.basis.key() not in fam_keys:
            raise InvalidWitnessError("witness basis is not a lower Auerbach basis of this space")
    i, j = w.basis_pair
    cols = w.basis.columns
    triple = hexagon_regular_equiv(section2(space.ball, cols[i], cols[j]))
    if triple != (w.p1, w.p2, w.p3):
        raise InvalidWitnessError("witness triple does not match the section")


def _substitute(b: list[Vector], basis_cols: list[Vector], c: Fraction) -> tuple[list[Vector], list[Vector]]:
    """Replace the first basis vector x1 by x1 - c x2."""
    new_rows = [(r[0] - c * r[1],) + r[1:] for r in b]
    new_cols = [el.sub(basis_cols[0], el.scale(c, basis_cols[1]))] + basis_cols[1:]
    return new_rows, new_cols


def _normalize_pair(b: list[Vector], cols: list[Vector]):
    """Arrange that some row of the embedding reads (+-1, +-1) in the first two
    columns.

    Returns ``(rows, basis columns, role rows, extra row, case label)`` where
    ``role rows[k]`` is the row playing the k-th identity row.
    """
    n = len(cols)
    top = list(range(n))
    for r, row in enumerate(b):
        if abs(row[0]) == 1 and abs(row[1]) == 1:
            return b, cols, top, r, "I"

    for swap in (False, True):
        rows = [(r[1], r[0]) + r[2:] for r in b] if swap else b
        basis_cols = [cols[1], cols[0]] + cols[2:] if swap else cols
        # rows of the form +-(c, 1) with 0 < |c| < 1
        slopes = []
        for r, row in enumerate(rows):
            if abs(row[1]) == 1 and 0 < abs(row[0]) < 1:
                slopes.append((r, row[0] * row[1]))
        for (r, c), (s, minus_d) in itertools.permutations(slopes, 2):
            if c > 0 and minus_d < 0 and c - minus_d == 1:
                new_rows, new_cols = _substitute(rows, basis_cols, c)
                roles = [0, r] + top[2:]
                label = "II (x2 <- x2 - c x1)" if swap else "II (x1 <- x1 - c x2)"
                return new_rows, new_cols, roles, s, label
    raise InvalidWitnessError("no row normalization found for the hexagonal pair")


def construct_nonparallelepipedal(space: PolyhedralSpace, w: HexagonWitness | None) -> MvseCandidate:
    if w is None:
        raise InvalidWitnessError("no hexagon witness: the space has only parallelepipedal MVSE")
    _check_witness(space, w)
    n = space.dim
    i, j = w.basis_pair
    cols = w.basis.columns
    order = [i, j] + [k for k in range(n) if k not in (i, j)]
    cols = [cols[k] for k in order]
    basis = el.from_columns(cols)

    # isometric embedding into l_inf^m: biorthogonal functionals, then every
    # extreme point of the dual ball, each evaluated on the basis
    rows: list[Vector] = list(el.identity(n))
    rows += [el.vecmat(f, basis) for f in space.ball.facets]

    rows, cols, roles, extra, case = _normalize_pair(rows, cols)
    m = len(rows)
    zero = Fraction(0)
    d_rows = [(zero,) * n for _ in range(m)]
    for k, r in enumerate(roles):
        d_rows[r] = rows[r] if k != 1 else (rows[r][0], rows[r][1]) + (zero,) * (n - 2)
    d_rows[extra] = (rows[extra][0], rows[extra][1]) + (zero,) * (n - 2)
    d = tuple(d_rows)
    emb = tuple(rows)

    # projection with range X and kernel (col span D)^perp; in basis
    # coordinates the image of the k-th cube edge is (D^T B)^{-1} d_k
    gram = el.matmul(el.transpose(d), emb)
    gram_inv = el.inverse(gram)
    new_basis = el.from_columns(cols)
    gens = []
    for dk in d:
        if not el.is_zero(dk):
            gens.append(el.matvec(new_basis, el.matvec(gram_inv, dk)))
    z = Zonotope(n, gens)
    gen_matrix = el.from_columns(z.generators)
    checks = validate_mvse_candidate(space, z)
    if not checks.all_passed:
        log.warning("MVSE candidate for %s failed checks: %s", space.name, checks.failed())
    return MvseCandidate(z, gen_matrix, checks, emb, d, case)


def _tu_certificate(gens: Sequence[Vector], n: int) -> bool:
    chosen: list[Vector] = []
    for g in gens:
        if el.rank(tuple(chosen + [g])) > len(chosen):
            chosen.append(g)
        if len(chosen) == n:
            break
    if len(chosen) < n:
        return False
    coords = el.matmul(el.inverse(el.from_columns(chosen)), el.from_columns(gens))
    return el.is_totally_unimodular(el.transpose(coords))


def validate_mvse_candidate(space: PolyhedralSpace, z: Zonotope | MvseCandidate) -> MvseChecks:
    from .auerbach import min_parallelepiped

    if isinstance(z, MvseCandidate):
        z = z.zonotope
    n = space.dim
    full = len(z.generators) >= n and el.rank(z.generators) == n
    contains = full and all(z.gauge(v) <= 1 for v in space.ball.vertices)
    _, target = min_parallelepiped(space)
    return MvseChecks(
        contains_ball=contains,
        volume_matches=zonotope_volume(z) == target,
        tu_certified=full and _tu_certificate(z.generators, n),
        not_parallelepiped=not is_parallelepiped(z),
    )
