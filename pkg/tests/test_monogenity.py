import pytest

from monogen.arith import EffortConfig
from monogen.dedekind import SplittingType
from monogen.monogenity import (
    INCONCLUSIVE,
    MONOGENIC,
    NOT_MONOGENIC,
    ORACLE_MONOGENIC,
    ORACLE_NOT_APPLICABLE,
    ORACLE_NOT_MONOGENIC,
    ReduciblePolynomialError,
    analyze,
    common_index_divisor,
    count_irreducibles,
    family_oracle,
    field_discriminant,
)
from monogen.poly import IntPoly, parse_poly


def test_analyze_prime_discriminant():
    report = analyze(parse_poly("x^3 - x - 1"))
    assert report.verdict == MONOGENIC
    assert report.disc == -23
    assert report.index.value == 1 and report.index.exact
    assert field_discriminant(report) == -23


def test_analyze_quadratic_with_index_two():
    report = analyze(parse_poly("x^2 - 5"))
    assert report.verdict == NOT_MONOGENIC
    assert report.witnesses == (2,)
    assert report.index.value == 2
    assert field_discriminant(report) == 5
    entry = next(e for e in report.ledger if e.p == 2)
    assert entry.method == "ore"
    assert entry.splitting.pairs == ((1, 2),)


def test_analyze_sextic_trinomial():
    report = analyze(parse_poly("x^6 + 2x^2 + 2"))
    assert report.verdict == MONOGENIC
    assert report.disc == -2508800  # -2^11 * 5^2 * 7^2


def test_field_discriminants():
    assert analyze(parse_poly("x^2 - 5")).field_disc == 5
    assert analyze(parse_poly("x^2 - 2")).field_disc == 8
    assert analyze(parse_poly("x^4 - 2")).field_disc == -2048


def test_discriminant_identity_on_ledger():
    for text in ("x^2 - 5", "x^2 - 2", "x^3 - x^2 - 2x - 8", "x^4 - 2"):
        report = analyze(parse_poly(text))
        assert report.disc == report.index.value ** 2 * report.field_disc


def test_analyze_classical_cubic_field_certificate():
    report = analyze(parse_poly("x^3 - x^2 - 2x - 8"))
    assert report.verdict == NOT_MONOGENIC
    entry = next(e for e in report.ledger if e.p == 2)
    assert entry.nu_index.value == 1 and entry.nu_index.exact
    assert entry.splitting.pairs == ((1, 1), (1, 1), (1, 1))
    assert report.common_index_divisors == (2,)
    assert all(q < 3 for q in report.common_index_divisors)
    assert report.field_disc == -503


def test_analyze_rejects_bad_input():
    with pytest.raises(ReduciblePolynomialError):
        analyze(parse_poly("x^2 - 1"))
    with pytest.raises(ReduciblePolynomialError):
        analyze(parse_poly("x^4 + 2x^2 + 1"))
    with pytest.raises(ValueError):
        analyze(parse_poly("2x^2 - 1"))


def test_analyze_inconclusive_on_unfactored_cofactor():
    # disc = 4 d with d = 3 mod 4 a semiprime beyond the effort budget, so
    # p = 2 resolves to 0 but the cofactor could still hide a square
    d = 1000003 * 1000033
    report = analyze(
        IntPoly((-d, 0, 1)), effort=EffortConfig(trial_limit=1000, rho_rounds=0)
    )
    assert report.verdict == INCONCLUSIVE
    assert report.field_disc is None
    assert any("cofactor" in note for note in report.notes)


def test_analyze_irregular_prime_reports_lower_bound():
    # x^2 + 6x + 36 is not 3-regular; nu_3 is a positive lower bound, which
    # still certifies a nontrivial index
    report = analyze(parse_poly("x^2 + 6x + 36"))
    assert report.verdict == NOT_MONOGENIC
    entry = next(e for e in report.ledger if e.p == 3)
    assert not entry.nu_index.exact
    assert entry.nu_index.value >= 1
    assert entry.splitting is None
    assert report.field_disc is None


def test_count_irreducibles():
    assert count_irreducibles(2, 1) == 2
    assert count_irreducibles(2, 2) == 1
    assert count_irreducibles(3, 1) == 3
    assert count_irreducibles(2, 3) == 2
    assert count_irreducibles(3, 2) == 3
    assert count_irreducibles(5, 4) == (5 ** 4 - 5 ** 2) // 4


def test_common_index_divisor_counting():
    split_three_linear = SplittingType(((1, 1), (1, 1), (1, 1)))
    assert common_index_divisor(split_three_linear, 2, 3)
    assert not common_index_divisor(SplittingType(((1, 2),)), 2, 2)
    assert not common_index_divisor(split_three_linear, 5, 3)


def test_common_index_divisor_hensel_bound_assertion():
    # five distinct linear primes cannot exist for a degree-5 field at p = 5,
    # but if such a splitting is fed in the counting must not fire silently
    fake = SplittingType(((1, 1),) * 6)
    with pytest.raises(ArithmeticError):
        common_index_divisor(fake, 5, 5)


def test_family_oracle_binomial():
    assert family_oracle("binomial12", m=2).verdict == ORACLE_MONOGENIC
    assert family_oracle("binomial12", m=5).verdict == ORACLE_NOT_MONOGENIC
    assert family_oracle("binomial12", m=10).verdict == ORACLE_NOT_MONOGENIC  # -1 mod 9... 10 = 1 mod 9
    assert family_oracle("binomial12", m=-10).verdict == ORACLE_NOT_MONOGENIC  # -10 = -1 mod 9
    assert family_oracle("binomial12", m=12).verdict == ORACLE_NOT_APPLICABLE  # not squarefree
    assert family_oracle("binomial12", m=7, n=7).verdict == ORACLE_NOT_APPLICABLE


def test_family_oracle_xn_x_1():
    assert family_oracle("xn-x-1", n=5).verdict == ORACLE_MONOGENIC
    assert family_oracle("xn-x-1", n=8).verdict == ORACLE_NOT_MONOGENIC


def test_family_oracle_trinomial():
    verdict = family_oracle("trinomial-axmb", n=6, m=2, a=2, b=2)
    assert verdict.verdict == ORACLE_MONOGENIC
    assert "35" in verdict.reason
    assert family_oracle("trinomial-axmb", n=6, m=2, a=3, b=2).verdict == ORACLE_NOT_APPLICABLE


def test_family_oracle_unknown():
    with pytest.raises(ValueError):
        family_oracle("nosuch", n=1)


def test_analyze_matches_oracle_spot_checks():
    for m in (2, 3, 5, 13, -10):
        oracle = family_oracle("binomial12", m=m)
        report = analyze(oracle.polynomial)
        assert report.verdict == oracle.verdict, f"m={m}"
