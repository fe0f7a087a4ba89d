import itertools
import random
from fractions import Fraction

import pytest

from auerbach_mvse import exactlin as el
from auerbach_mvse import spaces
from auerbach_mvse.auerbach import lower_auerbach_bases, min_parallelepiped
from auerbach_mvse.errors import InvalidWitnessError
from auerbach_mvse.mvse import (
    NON_PARALLELEPIPEDAL,
    PARALLELEPIPED_ONLY,
    HexagonWitness,
    construct_nonparallelepipedal,
    decide,
    hexagon_regular_equiv,
    validate_mvse_candidate,
)
from auerbach_mvse.polytope import SectionPolygon, Zonotope, cross2, cyclic_order, section2, zonotope_volume

from oracles import random_integer_points, random_unimodular, zonotope_contains, zonotope_volume_oracle

F = Fraction
HALF = F(1, 2)
HALF_MATRIX = [[0, HALF, HALF], [HALF, 0, -HALF], [HALF, -HALF, 0]]


def polygon(points):
    pts = [el.vector(p) for p in points]
    ring = cyclic_order(pts + [el.neg(p) for p in pts])
    return SectionPolygon((1, 0), (0, 1), tuple(ring))


# --- hexagon test --------------------------------------------------------------

def test_hexagon_regular_equiv_examples():
    triple = hexagon_regular_equiv(polygon([(1, 0), (1, 1), (0, 1)]))
    assert triple is not None
    assert {abs(cross2(a, b)) for a, b in itertools.combinations(triple, 2)} == {1}
    assert hexagon_regular_equiv(polygon([(1, 1), (1, -1)])) is None
    assert hexagon_regular_equiv(polygon([(1, 0), (1, 1), (0, 2)])) is None


def test_hexagon_test_invariant_under_coordinate_change():
    rng = random.Random(3)
    shapes = [[(1, 0), (1, 1), (0, 1)], [(1, 0), (1, 1), (0, 2)], [(2, 1), (1, 2), (-1, 1)], [(1, 1), (1, -1)]]
    for _ in range(40):
        t = el.matrix([[F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(2)] for _ in range(2)])
        if el.det(t) == 0:
            continue
        for pts in shapes:
            before = hexagon_regular_equiv(polygon(pts)) is not None
            after = hexagon_regular_equiv(polygon([el.matvec(t, el.vector(p)) for p in pts])) is not None
            assert before == after


# --- decide -------------------------------------------------------------------------

@pytest.mark.parametrize("factory, answer, volume", [
    (lambda: spaces.make_lp_ball(3, "inf"), PARALLELEPIPED_ONLY, 8),
    (lambda: spaces.make_lp_ball(3, "1"), NON_PARALLELEPIPEDAL, 2),
    (lambda: spaces.make_lp_ball(4, "1"), PARALLELEPIPED_ONLY, 1),
    (lambda: spaces.make_lp_ball(2, "1"), PARALLELEPIPED_ONLY, 2),
    (lambda: spaces.sum_zero_space(), NON_PARALLELEPIPEDAL, 8),
])
def test_decide_examples(factory, answer, volume):
    report = decide(factory())
    assert report.answer == answer
    assert report.min_parallelepiped_volume == volume
    assert (report.witness is not None) == (answer == NON_PARALLELEPIPEDAL)


def test_decide_hexagon_sums(hex_l1_line, hex_linf_line):
    assert decide(hex_l1_line).answer == PARALLELEPIPED_ONLY
    assert decide(hex_linf_line).answer == NON_PARALLELEPIPEDAL


def test_l1_3_witness_is_from_half_matrix_basis(l1_3):
    w = decide(l1_3).witness
    assert w.basis.key() == lower_auerbach_bases(l1_3).bases[0].key()
    assert lower_auerbach_bases(l1_3).contains(HALF_MATRIX)


def test_sum_zero_every_pair_of_identity_basis_is_hexagonal(sum_zero):
    for x1, x2 in itertools.combinations(el.identity(3), 2):
        assert hexagon_regular_equiv(section2(sum_zero.ball, x1, x2)) is not None


def test_report_dict(l1_3, linf_3):
    d = decide(l1_3).to_dict()
    assert d["answer"] == NON_PARALLELEPIPEDAL
    assert d["min_parallelepiped_volume"] == "2"
    assert d["witness"]["pair"] == [0, 1]
    assert decide(linf_3).to_dict()["witness"] is None


def test_witness_reproducible(l1_3, sum_zero, hex_linf_line):
    for space in (l1_3, sum_zero, hex_linf_line):
        w = decide(space).witness
        i, j = w.basis_pair
        cols = w.basis.columns
        again = hexagon_regular_equiv(section2(space.ball, cols[i], cols[j]))
        assert {el.sign_normalize(p) for p in again} == {el.sign_normalize(p) for p in (w.p1, w.p2, w.p3)}


def random_space(rng, n):
    while True:
        pts = random_integer_points(rng, n, rng.randint(n, 6), bound=2)
        if el.rank(el.matrix(pts)) == n:
            return spaces.make_vrep_space(pts)


def test_answer_invariant_and_volume_scaling_under_linear_maps(l1_3, sum_zero):
    rng = random.Random(17)
    cases = [l1_3, sum_zero, spaces.rational_hexagon_space()] + [random_space(rng, rng.choice([2, 3])) for _ in range(8)]
    for space in cases:
        base = decide(space)
        t = el.matrix(random_unimodular(rng, space.dim))
        moved = decide(space.transformed(t))
        assert moved.answer == base.answer
        assert moved.min_parallelepiped_volume == base.min_parallelepiped_volume
        scaled = el.matrix([[2 if r == c == 0 else int(r == c) for c in range(space.dim)] for r in range(space.dim)])
        m = el.matmul(t, scaled)
        assert decide(space.transformed(m)).min_parallelepiped_volume == abs(el.det(m)) * base.min_parallelepiped_volume


# --- construction -------------------------------------------------------------------

def check_candidate_with_oracles(space, cand):
    gens = cand.zonotope.generators
    _, target = min_parallelepiped(space)
    assert zonotope_volume_oracle(gens, space.dim) == target
    for v in space.ball.all_vertices():
        assert zonotope_contains(gens, space.dim, v)


def test_construct_l1_3(l1_3):
    cand = construct_nonparallelepipedal(l1_3, decide(l1_3).witness)
    assert cand.checks.all_passed
    assert len(cand.zonotope.generators) == 4
    assert zonotope_volume(cand.zonotope) == 2
    assert cand.case == "I"
    check_candidate_with_oracles(l1_3, cand)


def test_construct_sum_zero(sum_zero):
    cand = construct_nonparallelepipedal(sum_zero, decide(sum_zero).witness)
    assert cand.checks.all_passed
    assert len(cand.zonotope.generators) == 4
    assert zonotope_volume(cand.zonotope) == decide(sum_zero).min_parallelepiped_volume
    check_candidate_with_oracles(sum_zero, cand)


def test_construct_hexagon_prism(hex_linf_line):
    cand = construct_nonparallelepipedal(hex_linf_line, decide(hex_linf_line).witness)
    assert cand.checks.all_passed
    check_candidate_with_oracles(hex_linf_line, cand)


def test_construct_case_two(case_two_space):
    basis = next(b for b in lower_auerbach_bases(case_two_space).bases
                 if b.key() == tuple(sorted(el.identity(3))))
    cols = basis.columns
    i, j = cols.index(el.vector([1, 0, 0])), cols.index(el.vector([0, 1, 0]))
    triple = hexagon_regular_equiv(section2(case_two_space.ball, cols[i], cols[j]))
    assert triple is not None
    w = HexagonWitness(*triple, (i, j), basis)
    cand = construct_nonparallelepipedal(case_two_space, w)
    assert cand.case.startswith("II")
    assert cand.checks.all_passed
    check_candidate_with_oracles(case_two_space, cand)


def test_construct_requires_witness(linf_3):
    with pytest.raises(InvalidWitnessError):
        construct_nonparallelepipedal(linf_3, decide(linf_3).witness)


def test_construct_rejects_stale_witness(l1_3, sum_zero):
    w = decide(l1_3).witness
    with pytest.raises(InvalidWitnessError):
        construct_nonparallelepipedal(sum_zero, w)


def test_validate_min_parallelepiped_as_candidate(l1_3):
    basis, _ = min_parallelepiped(l1_3)
    checks = validate_mvse_candidate(l1_3, Zonotope(3, basis.columns))
    assert checks.contains_ball and checks.volume_matches and checks.tu_certified
    assert not checks.not_parallelepiped
    assert checks.failed() == ["not_parallelepiped"]


def test_validate_cube_for_l1_3(l1_3):
    checks = validate_mvse_candidate(l1_3, Zonotope(3, el.identity(3)))
    assert checks.contains_ball
    assert not checks.volume_matches


def test_validate_too_small(l1_3):
    checks = validate_mvse_candidate(l1_3, Zonotope(3, [(HALF, 0, 0), (0, HALF, 0), (0, 0, HALF)]))
    assert not checks.contains_ball


def test_random_constructions_pass_checks():
    rng = random.Random(99)
    built = 0
    for _ in range(60):
        space = random_space(rng, rng.choice([2, 3]))
        report = decide(space)
        if report.witness is None:
            continue
        cand = construct_nonparallelepipedal(space, report.witness)
        assert cand.checks.all_passed, cand.checks.failed()
        assert zonotope_volume(cand.zonotope) == report.min_parallelepiped_volume
        built += 1
    assert built > 0
