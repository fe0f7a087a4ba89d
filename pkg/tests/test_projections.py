import random
from fractions import Fraction

import pytest
import sympy

from auerbach_mvse import exactlin as el
from auerbach_mvse import spaces
from auerbach_mvse.errors import CapacityError, DimensionError
from auerbach_mvse.mvse import hexagon_regular_equiv
from auerbach_mvse.polytope import gauge_norm, section2
from auerbach_mvse.projections import (
    NORM_ONE_EXISTS,
    NOT_ONE_COMPLEMENTED,
    ProjectionSpec,
    exists_norm_one_projection,
    extend_to_basis,
    hexagonal_subspace_candidates,
    operator_norm,
)

from oracles import random_integer_points

F = Fraction


def coords(space, ambient):
    return space.embedding.to_coords(el.vector(ambient))


def test_identity_projection_has_norm_one(sum_zero, l1_3):
    for space in (sum_zero, l1_3):
        spec = ProjectionSpec(space, el.identity(3), (), ())
        assert operator_norm(spec) == 1


def test_forced_sum_zero_projection_has_norm_two(sum_zero):
    h = (coords(sum_zero, [1, -1, 0, 0]), coords(sum_zero, [0, 1, -1, 0]))
    u = (coords(sum_zero, [0, 0, 1, -1]),)
    spec = ProjectionSpec(sum_zero, h, u, (el.vector([0, 0, 0]),))
    image = sum_zero.embedding.to_ambient(spec.apply(coords(sum_zero, [1, 1, -1, -1])))
    assert image == (1, 1, -2, 0)
    assert gauge_norm(sum_zero.ball, spec.apply(coords(sum_zero, [1, 1, -1, -1]))) == 2
    assert operator_norm(spec) >= 2


def test_block_projection_in_l1_sum(hex_l1_line):
    spec = ProjectionSpec(hex_l1_line, ((1, 0, 0), (0, 1, 0)), ((0, 0, 1),), ((0, 0, 0),))
    assert operator_norm(spec) == 1


def test_projection_spec_validation(l1_3):
    with pytest.raises(DimensionError):
        ProjectionSpec(l1_3, ((1, 0, 0),), ((0, 1, 0),), ((0, 0, 0),))
    with pytest.raises(DimensionError):
        ProjectionSpec(l1_3, ((1, 0, 0), (0, 1, 0)), ((0, 0, 1),), ((0, 0, 1),))
    with pytest.raises(DimensionError):
        ProjectionSpec(l1_3, ((1, 0, 0), (2, 0, 0)), ((0, 0, 1),), ((0, 0, 0),))


def test_sum_zero_hexagonal_plane_not_one_complemented(sum_zero):
    h = [coords(sum_zero, [1, -1, 0, 0]), coords(sum_zero, [0, 1, -1, 0])]
    report = exists_norm_one_projection(sum_zero, h)
    assert report.answer == NOT_ONE_COMPLEMENTED
    assert report.witness is None
    assert report.certificate["contradiction"].startswith("0 <= -")


def test_hexagon_block_is_one_complemented(hex_l1_line):
    report = exists_norm_one_projection(hex_l1_line, [(1, 0, 0), (0, 1, 0)])
    assert report.answer == NORM_ONE_EXISTS
    assert operator_norm(report.witness) == 1
    assert report.to_dict()["operator_norm"] == "1"


def test_full_space_is_trivially_complemented(sum_zero):
    report = exists_norm_one_projection(sum_zero, el.identity(3))
    assert report.answer == NORM_ONE_EXISTS
    assert report.witness.complement_basis == ()


def test_input_errors(l1_3):
    with pytest.raises(DimensionError):
        exists_norm_one_projection(l1_3, [(1, 0)])
    with pytest.raises(DimensionError):
        exists_norm_one_projection(l1_3, [(1, 0, 0), (2, 0, 0)])


def test_unknown_cap():
    space = spaces.make_lp_ball(6, "inf")
    with pytest.raises(CapacityError):
        exists_norm_one_projection(space, el.identity(6)[:3])


def test_extend_to_basis():
    assert extend_to_basis([el.vector([1, 1, 0])], 3) == (el.vector([1, 0, 0]), el.vector([0, 0, 1]))


# --- candidates -------------------------------------------------------------

def test_candidate_list(sum_zero):
    cands = hexagonal_subspace_candidates(sum_zero)
    assert len(cands) == 12
    ambient = {tuple(sum_zero.embedding.to_ambient(c[0])) + tuple(sum_zero.embedding.to_ambient(c[1])) for c in cands}
    assert (1, -1, 0, 0, 0, 1, -1, 0) in ambient
    assert (1, -1, 0, 0, 0, 0, 1, -1) not in ambient
    for x1, x2 in cands:
        assert hexagon_regular_equiv(section2(sum_zero.ball, x1, x2)) is not None


def test_disjoint_supports_give_parallelogram(sum_zero):
    s = section2(sum_zero.ball, coords(sum_zero, [1, -1, 0, 0]), coords(sum_zero, [0, 0, 1, -1]))
    assert len(s.verts2d) == 4


def test_no_candidate_is_one_complemented(sum_zero):
    for pair in hexagonal_subspace_candidates(sum_zero):
        assert exists_norm_one_projection(sum_zero, pair).answer == NOT_ONE_COMPLEMENTED


def test_candidates_need_sum_zero_space(l1_3):
    with pytest.raises(DimensionError):
        hexagonal_subspace_candidates(l1_3)


# --- invariants --------------------------------------------------------------

def random_hrep_space(rng):
    while True:
        rows = random_integer_points(rng, 3, rng.randint(3, 6), bound=2)
        if el.rank(el.matrix(rows)) == 3:
            return rows, spaces.make_hrep_space(rows)


def plane_projection_grid_has_norm_one(rows, space, h):
    """Scan P(u) = c1 h1 + c2 h2 with (c1, c2) on a 1/8 grid of [-4, 4]^2.

    With v = a1 h1 + a2 h2 + t u (decomposed by sympy), the norm of P(v) is
    max over the defining rows f of |(a1 + t c1) f.h1 + (a2 + t c2) f.h2|."""
    u = extend_to_basis(h, 3)
    frame = sympy.Matrix([[sympy.Rational(str(x)) for x in col] for col in tuple(h) + u]).T
    decomp = []
    for v in space.ball.vertices:
        sol = frame.LUsolve(sympy.Matrix([sympy.Rational(str(x)) for x in v]))
        decomp.append(tuple(F(str(x)) for x in sol))
    fh = [(sum(F(a) * b for a, b in zip(f, h[0])), sum(F(a) * b for a, b in zip(f, h[1]))) for f in rows]
    ticks = [F(i, 8) for i in range(-32, 33)]
    for c1 in ticks:
        for c2 in ticks:
            if all(abs((a1 + t * c1) * g1 + (a2 + t * c2) * g2) <= 1
                   for a1, a2, t in decomp for g1, g2 in fh):
                return True
    return False


def test_infeasible_two_unknown_instances_agree_with_grid(sum_zero):
    rng = random.Random(8)
    seen = {NORM_ONE_EXISTS: 0, NOT_ONE_COMPLEMENTED: 0}
    cases = [(list(sum_zero.embedding.basis_matrix), sum_zero, list(pair))
             for pair in hexagonal_subspace_candidates(sum_zero)[:2]]
    while len(cases) < 14:
        rows, space = random_hrep_space(rng)
        h = [el.vector([rng.randint(-1, 1) for _ in range(3)]) for _ in range(2)]
        if el.rank(tuple(h)) == 2:
            cases.append((rows, space, h))
    for rows, space, h in cases:
        report = exists_norm_one_projection(space, h)
        seen[report.answer] += 1
        if report.answer == NOT_ONE_COMPLEMENTED:
            assert not plane_projection_grid_has_norm_one(rows, space, h)
        else:
            assert operator_norm(report.witness) == 1
    assert seen[NOT_ONE_COMPLEMENTED] > 2


def test_lines_are_always_one_complemented():
    rng = random.Random(9)
    for _ in range(8):
        _, space = random_hrep_space(rng)
        h = el.vector([rng.randint(-2, 2) for _ in range(3)])
        if not el.is_zero(h):
            assert exists_norm_one_projection(space, [h]).answer == NORM_ONE_EXISTS


def test_operator_norm_invariant_under_complement_rescaling(sum_zero):
    rng = random.Random(4)
    h = (coords(sum_zero, [1, -1, 0, 0]), coords(sum_zero, [0, 1, -1, 0]))
    u = (coords(sum_zero, [0, 0, 1, -1]),)
    for _ in range(10):
        img = el.add(el.scale(F(rng.randint(-4, 4), 4), h[0]), el.scale(F(rng.randint(-4, 4), 4), h[1]))
        lam = F(rng.choice([-3, -1, 2, 5]), rng.randint(1, 3))
        base = ProjectionSpec(sum_zero, h, u, (img,))
        rescaled = ProjectionSpec(sum_zero, h, (el.scale(lam, u[0]),), (el.scale(lam, img),))
        assert operator_norm(base) == operator_norm(rescaled)
