import random

import pytest

from monogen.poly import parse_poly
from monogen.quartic import (
    BinaryForm,
    DegenerateParametrization,
    GeneratorSolution,
    QuarticSetup,
    SearchBounds,
    TernaryQuadraticForm,
    cubic_form_reducible,
    element_characteristic_poly,
    find_generators,
    index_of_element,
    parametrize,
    q0_solution,
    quadratic_forms,
    quartic_thue_forms,
    resolvent_cubic,
    search_generators,
    solve_cubic_thue_small,
)

X4_MINUS_2 = parse_poly("x^4 - 2")
X4_PLUS_1 = parse_poly("x^4 + 1")
SMALL_BOUNDS = SearchBounds(cubic_box=100, pq_box=100, q0_box=100, direct_box=100)


def setup_for(f, m=1):
    return QuarticSetup(f, d=1, n_xi=1, m=m)


# ---------------------------------------------------------------------------
# form construction


def test_setup_validation():
    with pytest.raises(ValueError):
        QuarticSetup(parse_poly("x^3 - 2"))
    with pytest.raises(ValueError):
        QuarticSetup(X4_MINUS_2, n_xi=5)  # 5 does not divide d^6 m
    setup = QuarticSetup(X4_MINUS_2, d=2, n_xi=4, m=3)
    assert setup.i_m == 2 ** 6 * 3 // 4


def test_resolvent_cubic_examples():
    assert resolvent_cubic(setup_for(X4_MINUS_2)).coeffs == (1, 0, 8, 0)
    assert resolvent_cubic(setup_for(X4_PLUS_1)).coeffs == (1, 0, -4, 0)
    # biquadratic x^4 + a x^2 + b factors as (u - a v)(u^2 - 4 b v^2)
    from monogen.poly import IntPoly

    for a, b in [(3, 5), (-2, 7), (1, -4)]:
        F = resolvent_cubic(setup_for(IntPoly((b, 0, a, 0, 1))))
        for u, v in [(1, 2), (-3, 1), (5, -2), (0, 1)]:
            assert F(u, v) == (u - a * v) * (u * u - 4 * b * v * v)


def test_resolvent_reducibility_flag():
    assert cubic_form_reducible(resolvent_cubic(setup_for(X4_MINUS_2)))
    assert cubic_form_reducible(resolvent_cubic(setup_for(X4_PLUS_1)))
    # x^4 - x - 1 has Galois group S4, so the resolvent cubic is irreducible
    assert not cubic_form_reducible(resolvent_cubic(setup_for(parse_poly("x^4 - x - 1"))))


def test_quadratic_forms_examples():
    q1, q2 = quadratic_forms(setup_for(X4_MINUS_2))
    assert (q1.xx, q1.zz) == (1, -2)
    assert q1(1, 0, 0) == 1 and q1(0, 0, 1) == -2
    assert q2(1, 1, 1) == 0 and q2(0, 1, 0) == 1
    q1p, q2p = quadratic_forms(setup_for(X4_PLUS_1))
    assert q1p(1, 0, 1) == 2  # x^2 + z^2
    # for every f: Q2(1,0,0) = 0 and Q1(1,0,0) = 1, recovering xi itself
    rng = random.Random(2)
    for _ in range(20):
        coeffs = [rng.randint(-9, 9) for _ in range(4)] + [1]
        setup = setup_for(parse_poly("x^4"))  # placeholder, rebuilt below
        from monogen.poly import IntPoly

        f = IntPoly(coeffs)
        if f.degree != 4:
            continue
        setup = QuarticSetup(f)
        q1r, q2r = quadratic_forms(setup)
        assert q1r(1, 0, 0) == 1 and q2r(1, 0, 0) == 0


def test_ternary_form_evaluation_matches_coefficients():
    rng = random.Random(4)
    for _ in range(30):
        q = TernaryQuadraticForm(*[rng.randint(-9, 9) for _ in range(6)])
        x, y, z = (rng.randint(-8, 8) for _ in range(3))
        expected = (
            q.xx * x * x + q.xy * x * y + q.yy * y * y
            + q.xz * x * z + q.yz * y * z + q.zz * z * z
        )
        assert q(x, y, z) == expected


# ---------------------------------------------------------------------------
# cubic Thue enumeration


def test_cubic_thue_small_reducible_units():
    F = BinaryForm(3, (1, 0, 8, 0))  # u(u^2 + 8v^2)
    assert solve_cubic_thue_small(F, 1, 100) == [(-1, 0), (1, 0)]
    F2 = BinaryForm(3, (1, 0, -4, 0))  # u(u - 2v)(u + 2v)
    assert solve_cubic_thue_small(F2, 1, 100) == [(-1, 0), (1, 0)]


def test_cubic_thue_small_empty():
    F = BinaryForm(3, (1, 0, 8, 0))
    assert solve_cubic_thue_small(F, 7, 50) == []


def test_cubic_thue_small_matches_both_signs():
    F = BinaryForm(3, (1, 0, 0, -2))  # u^3 - 2v^3
    sols = solve_cubic_thue_small(F, 1, 20)
    assert (1, 0) in sols and (-1, 0) in sols and (1, 1) in sols and (-1, -1) in sols


# ---------------------------------------------------------------------------
# Q0 zeros and parametrization


def test_q0_solution_order():
    q0 = TernaryQuadraticForm(0, 0, 1, -1, 0, 0)  # y^2 - xz
    # (0, 0, 1) is a zero with z != 0 and smaller (|z|, |y|, |x|) than (1, 1, 1)
    assert q0_solution(q0, 10) == (0, 0, 1)


def test_q0_solution_requires_nonzero_z():
    # x^2 - y^2 vanishes on (1, 1, 0), but that zero has z = 0 and must be
    # skipped in favor of one with z != 0
    q0 = TernaryQuadraticForm(1, 0, -1, 0, 0, 0)
    sol = q0_solution(q0, 5)
    assert sol is not None and sol[2] != 0
    assert q0(*sol) == 0


def test_q0_solution_positive_definite():
    q0 = TernaryQuadraticForm(1, 0, 1, 0, 0, 1)  # x^2 + y^2 + z^2
    assert q0_solution(q0, 20) is None


def test_parametrize_reference_base():
    q0 = TernaryQuadraticForm(0, 0, 1, -1, 0, 0)  # y^2 - xz
    param = parametrize(q0, (1, 1, 1))
    assert param.c_linear == (1, -2)
    assert param.c_quadratic == (0, 0, 1)
    assert param.matrix == ((1, -2, 1), (0, 1, -1), (0, 0, 1))
    assert param.det == 1 and param.d0 == 1
    assert param.k_divisors == (1,)
    # kx = (p - q)^2, ky = pq - q^2, kz = q^2
    for p, q in [(2, 1), (3, -1), (0, 1), (5, 3)]:
        assert param.image(p, q) == ((p - q) ** 2, p * q - q * q, q * q)


def test_parametrize_scaled_base_gives_same_result():
    q0 = TernaryQuadraticForm(0, 0, 1, -1, 0, 0)
    assert parametrize(q0, (2, 2, 2)) == parametrize(q0, (1, 1, 1))


def test_parametrize_flipped_base_symmetry():
    q0 = TernaryQuadraticForm(0, 0, 1, -1, 0, 0)
    param = parametrize(q0, (1, -1, 1))
    assert param.c_linear == (1, 2)
    for p, q in [(2, 1), (1, -3)]:
        x, y, z = param.image(p, q)
        assert q0(x, y, z) == 0


def test_parametrize_images_lie_on_q0():
    rng = random.Random(6)
    tried = 0
    while tried < 25:
        q0 = TernaryQuadraticForm(*[rng.randint(-5, 5) for _ in range(6)])
        base = q0_solution(q0, 6)
        if base is None:
            continue
        try:
            param = parametrize(q0, base)
        except DegenerateParametrization:
            continue
        tried += 1
        for p, q in [(1, 0), (0, 1), (2, -3), (5, 7), (4, 4)]:
            x, y, z = param.image(p, q)
            assert q0(x, y, z) == 0


def test_parametrize_validates_base():
    q0 = TernaryQuadraticForm(0, 0, 1, -1, 0, 0)
    with pytest.raises(ValueError):
        parametrize(q0, (1, 2, 3))  # not a zero
    with pytest.raises(ValueError):
        parametrize(q0, (1, 0, 0))  # z = 0


def test_quartic_thue_forms_reference_branch():
    # branch (u, v) = (-1, 0) of x^4 - 2 with the textbook base (1, 1, 1)
    setup = setup_for(X4_MINUS_2)
    q1, q2 = quadratic_forms(setup)
    q0 = q2.scaled(-1).minus(q1.scaled(0))
    param = parametrize(q0, (1, 1, 1))
    f1, f2 = quartic_thue_forms(param, q1, q2)
    for p, q in [(1, 0), (2, 1), (3, -2), (0, 1)]:
        assert f1(p, q) == (p - q) ** 4 - 2 * q ** 4
    assert f1(1, 0) == 1
    assert f1(2, 1) == -1
    assert f2.is_zero  # Q2 composed with its own parametrization vanishes


def test_quartic_thue_form_compose_is_homogeneous_quartic():
    setup = setup_for(X4_PLUS_1)
    q1, q2 = quadratic_forms(setup)
    q0 = q2.scaled(1).minus(q1.scaled(0))
    param = parametrize(q0, q0_solution(q0, 10))
    f1, _ = quartic_thue_forms(param, q1, q2)
    assert f1.degree == 4
    for p, q in [(1, 2), (-3, 5)]:
        assert f1(2 * p, 2 * q) == 16 * f1(p, q)


# ---------------------------------------------------------------------------
# end-to-end generator search


def test_find_generators_pure_quartic():
    solutions = find_generators(setup_for(X4_MINUS_2), SMALL_BOUNDS)
    assert [s.triple for s in solutions] == [(1, -1, 1), (1, 0, 0), (1, 1, 1)]
    for s in solutions:
        assert index_of_element(X4_MINUS_2, s.triple, 1, -2048) == 1


def test_find_generators_eighth_root_of_unity():
    solutions = find_generators(setup_for(X4_PLUS_1), SMALL_BOUNDS)
    triples = [s.triple for s in solutions]
    assert (1, 0, 0) in triples
    for t in triples:
        assert index_of_element(X4_PLUS_1, t, 1, 256) == 1


def test_find_generators_no_solutions():
    assert find_generators(setup_for(X4_MINUS_2, m=7), SMALL_BOUNDS) == ()


def test_search_report_structure():
    report = search_generators(setup_for(X4_MINUS_2), SMALL_BOUNDS)
    assert report.resolvent_reducible is True
    assert {b.uv for b in report.branches} == {(1, 0), (-1, 0)}
    for branch in report.branches:
        assert branch.method in ("parametrized", "direct")
        assert branch.base is not None
    assert report.bounds == SMALL_BOUNDS


def test_direct_fallback_matches_parametrized():
    # force the fallback by shrinking the q0 box to nothing useful
    setup = setup_for(X4_MINUS_2)
    report = search_generators(
        setup, SearchBounds(cubic_box=100, pq_box=100, q0_box=1, direct_box=30)
    )
    assert [s.triple for s in report.solutions] == [(1, -1, 1), (1, 0, 0), (1, 1, 1)]


def test_canonical_sign_normalization():
    sol = GeneratorSolution.canonicalize(-1, 2, -3)
    assert sol.triple == (1, -2, 3)
    assert GeneratorSolution.canonicalize(0, -2, 1).triple == (0, 2, -1)


# ---------------------------------------------------------------------------
# the discriminant-based index oracle


def test_index_of_element_examples():
    assert index_of_element(X4_MINUS_2, (1, 0, 0), 1, -2048) == 1
    assert index_of_element(X4_MINUS_2, (2, 0, 0), 1, -2048) == 64
    assert index_of_element(X4_MINUS_2, (1, 1, 1), 1, -2048) == 1


def test_index_of_element_sign_invariance():
    rng = random.Random(8)
    for _ in range(20):
        xyz = tuple(rng.randint(-5, 5) for _ in range(3))
        try:
            forward = index_of_element(X4_MINUS_2, xyz, 1, -2048)
        except ValueError:
            continue
        mirrored = tuple(-c for c in xyz)
        assert index_of_element(X4_MINUS_2, mirrored, 1, -2048) == forward


def test_index_of_element_rejects_non_primitive():
    # xi^2 = sqrt(2) generates only a quadratic subfield
    with pytest.raises(ValueError):
        index_of_element(X4_MINUS_2, (0, 1, 0), 1, -2048)


def test_characteristic_polynomial_of_xi_is_f():
    assert element_characteristic_poly(X4_MINUS_2, (1, 0, 0)) == X4_MINUS_2


def test_index_form_oracle_identity():
    # |F(Q1, Q2)| evaluated on (x, y, z) equals the oracle index
    setup = setup_for(X4_MINUS_2)
    F = resolvent_cubic(setup)
    q1, q2 = quadratic_forms(setup)
    rng = random.Random(10)
    checked = 0
    while checked < 30:
        xyz = tuple(rng.randint(-10, 10) for _ in range(3))
        try:
            oracle = index_of_element(X4_MINUS_2, xyz, 1, -2048)
        except ValueError:
            continue
        assert abs(F(q1(*xyz), q2(*xyz))) == oracle
        checked += 1


def test_index_form_value_is_homogeneous_of_degree_six():
    setup = setup_for(X4_MINUS_2)
    F = resolvent_cubic(setup)
    q1, q2 = quadratic_forms(setup)
    rng = random.Random(12)
    for _ in range(15):
        xyz = tuple(rng.randint(-6, 6) for _ in range(3))
        t = rng.randint(1, 4)
        scaled = tuple(t * c for c in xyz)
        assert F(q1(*scaled), q2(*scaled)) == t ** 6 * F(q1(*xyz), q2(*xyz))
