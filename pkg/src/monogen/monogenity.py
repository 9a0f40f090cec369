"""Per-prime index analysis glued into a monogenity verdict.

A monic irreducible f is monogenic exactly when ind(f) = (Z_K : Z[alpha])
is 1 for a root alpha.  Since disc(f) = ind(f)^2 * D_K, only primes whose
square divides disc(f) can divide the index, and each one is dispatched
through a cheap chain: discriminant screen, then Dedekind's criterion,
then the Newton polygon analysis for an exact valuation when the
polynomial is p-regular.

Field-level non-monogenity is certified through common index divisors: a
prime p divides the index of every generator exactly when the splitting
type of p requires more distinct primes of some residue degree d than
there are monic irreducible polynomials of degree d over F_p.  Hensel's
bound (such primes are smaller than the field degree) is asserted, never
assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import (
    DEFAULT_EFFORT,
    EffortConfig,
    Factorization,
    SQUAREFREE,
    factorize,
    is_prime,
    squarefree_status,
)
from .dedekind import SplittingType, dedekind_test
from .newton import IndexBound, ore_analysis, splitting_from_reports
from .poly import IntPoly, factor_mod_p

MONOGENIC = "monogenic"
NOT_MONOGENIC = "not_monogenic"
INCONCLUSIVE = "inconclusive"

METHOD_DISC = "disc_coprime"
METHOD_DEDEKIND = "dedekind"
METHOD_ORE = "ore"

_SCREEN_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class ReduciblePolynomialError(ValueError):
    """The input polynomial was caught being reducible over Q."""


@dataclass(frozen=True)
class PrimeLedger:
    """What one prime contributed to the index, and how we know."""

    p: int
    method: str
    nu_index: IndexBound
    splitting: SplittingType | None = None

    def __post_init__(self):
        if self.method == METHOD_DISC and (
            self.nu_index.value != 0 or not self.nu_index.exact
        ):
            raise ValueError("the discriminant screen only certifies exact 0")
        if self.splitting is not None and not self.nu_index.exact:
            raise ValueError("a splitting type requires an exact valuation")


@dataclass(frozen=True)
class MonogenityReport:
    f: IntPoly
    disc: int
    disc_factorization: Factorization
    ledger: tuple[PrimeLedger, ...]
    verdict: str
    witnesses: tuple[int, ...]
    index: IndexBound
    field_disc: int | None
    common_index_divisors: tuple[int, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def fully_resolved(self) -> bool:
        return self.field_disc is not None


def irreducibility_screen(f: IntPoly) -> bool:
    """Cheap irreducibility screen for monic f.

    Raises ReduciblePolynomialError on a proven factor (an integer root,
    or a repeated factor detected by gcd(f, f') through disc = 0).
    Returns True when some mod-p factorization certifies irreducibility,
    False when nothing was proven either way (caller attestation applies).
    """
    if f.degree == 1:
        return True
    # Small integer roots; |root| <= 1 + max |c_i| for monic f.
    if f.coeffs[0] == 0:
        raise ReduciblePolynomialError("x divides f")
    bound = 1 + max(abs(c) for c in f.coeffs)
    for r in range(-min(bound, 10_000), min(bound, 10_000) + 1):
        if r != 0 and f(r) == 0:
            raise ReduciblePolynomialError(f"integer root {r}")
    from .poly import discriminant

    if discriminant(f) == 0:
        raise ReduciblePolynomialError("repeated factor (discriminant is 0)")
    for p in _SCREEN_PRIMES:
        try:
            factors = factor_mod_p(f, p)
        except ValueError:
            continue
        if len(factors) == 1 and factors[0][1] == 1 and factors[0][0].degree == f.degree:
            return True
    return False


def analyze(
    f: IntPoly,
    effort: EffortConfig = DEFAULT_EFFORT,
    seed: int = 0,
    attest_irreducible: bool = False,
) -> MonogenityReport:
    """Full monogenity analysis of a monic irreducible polynomial.

    The ledger carries one row per prime dividing the factored part of
    disc(f).  The verdict is NOT_MONOGENIC as soon as some prime certifies
    a positive index valuation (exact or lower bound), MONOGENIC when
    every prime resolves to exactly 0 and the discriminant is fully
    accounted for, and INCONCLUSIVE otherwise, with reasons in notes.
    """
    if not f.is_monic:
        raise ValueError("f must be monic")
    if f.degree < 2:
        raise ValueError("analysis requires degree >= 2")
    notes: list[str] = []
    certified = irreducibility_screen(f)
    if not certified and not attest_irreducible:
        notes.append(
            "irreducibility not certified by the mod-p screen; "
            "caller attestation assumed"
        )

    from .poly import discriminant

    disc = discriminant(f)
    fact = factorize(disc, effort)

    ledger: list[PrimeLedger] = []
    for p, exponent in fact.factors:
        if exponent <= 1:
            ledger.append(PrimeLedger(p, METHOD_DISC, IndexBound(0, True)))
            continue
        ded = dedekind_test(f, p, seed=seed)
        if not ded.divides_index:
            ledger.append(
                PrimeLedger(p, METHOD_DEDEKIND, IndexBound(0, True), ded.splitting)
            )
            continue
        ore = ore_analysis(f, p, seed=seed)
        splitting = None
        if ore.regular:
            splitting = splitting_from_reports(ore, f.degree)
        else:
            notes.append(
                f"p = {p} is not regular: index valuation is only bounded below"
            )
        ledger.append(PrimeLedger(p, METHOD_ORE, ore.bound, splitting))

    if not fact.is_complete:
        notes.append(
            f"discriminant cofactor {fact.cofactor} resisted factorization; "
            "primes hiding in it are unresolved"
        )

    witnesses = tuple(e.p for e in ledger if e.nu_index.value >= 1)
    all_exact = all(e.nu_index.exact for e in ledger)
    if witnesses:
        verdict = NOT_MONOGENIC
    elif all_exact and fact.is_complete:
        verdict = MONOGENIC
    else:
        verdict = INCONCLUSIVE

    index_value = 1
    for e in ledger:
        index_value *= e.p ** e.nu_index.value
    index = IndexBound(index_value, all_exact)

    field_disc = None
    if all_exact and fact.is_complete:
        square = index_value * index_value
        field_disc, rem = divmod(disc, square)
        if rem:
            raise ArithmeticError("index squared does not divide the discriminant")

    cid = []
    for e in ledger:
        if e.splitting is not None and common_index_divisor(e.splitting, e.p, f.degree):
            cid.append(e.p)

    return MonogenityReport(
        f=f,
        disc=disc,
        disc_factorization=fact,
        ledger=tuple(ledger),
        verdict=verdict,
        witnesses=witnesses,
        index=index,
        field_disc=field_disc,
        common_index_divisors=tuple(cid),
        notes=tuple(notes),
    )


def field_discriminant(report: MonogenityReport) -> int | None:
    """D_K when every prime resolved exactly, else None.

    v_p(D_K) = v_p(disc f) - 2 v_p(ind f) for every prime, and the sign of
    D_K matches the sign of disc(f); an unfactored squarefree cofactor
    would pass through unchanged, but factorize() never leaves one that is
    verified squarefree, so completeness is required here.
    """
    return report.field_disc


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    fact = factorize(n)
    if not fact.is_complete:
        raise ValueError("mobius argument too hard to factor")
    for _, e in fact.factors:
        if e >= 2:
            return 0
    return -1 if len(fact.factors) % 2 else 1


def count_irreducibles(p: int, d: int) -> int:
    """Number of monic irreducible polynomials of degree d over F_p."""
    if d < 1:
        raise ValueError("degree must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += _mobius(d // e) * p ** e
    assert total % d == 0
    return total // d


def common_index_divisor(splitting: SplittingType, p: int, n: int) -> bool:
    """Counting obstruction: does the splitting of p need more distinct
    monic irreducibles of some degree than F_p has?

    True certifies that p divides the index of every generator, so the
    field itself is not monogenic.  Primes p >= n can never be obstructed
    (Hensel's bound); that is asserted, and a violation would mean the
    splitting fed in was wrong.
    """
    obstructed = False
    for d, needed in splitting.residue_degree_counts().items():
        if needed > count_irreducibles(p, d):
            obstructed = True
            break
    if obstructed and p >= n:
        raise ArithmeticError(
            f"counting obstruction at p = {p} >= degree {n} contradicts Hensel's bound"
        )
    return obstructed


# ---------------------------------------------------------------------------
# Family oracles: closed-form monogenity verdicts for polynomial families
# with known classifications, used to cross-validate analyze() in sweeps.

FAMILY_XN_X_1 = "xn-x-1"
FAMILY_BINOMIAL_12 = "binomial12"
FAMILY_TRINOMIAL = "trinomial-axmb"

ORACLE_MONOGENIC = "monogenic"
ORACLE_NOT_MONOGENIC = "not_monogenic"
ORACLE_NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class FamilyVerdict:
    verdict: str
    reason: str
    polynomial: IntPoly | None = None


def _xn_x_1_oracle(n: int, effort: EffortConfig) -> FamilyVerdict:
    # x^n - x - 1 is monogenic iff n^n - (n-1)^(n-1) is squarefree.
    if n < 2:
        return FamilyVerdict(ORACLE_NOT_APPLICABLE, "need n >= 2")
    f = IntPoly((-1, -1) + (0,) * (n - 2) + (1,))
    value = n ** n - (n - 1) ** (n - 1)
    status = squarefree_status(value, effort)
    if status.verdict == SQUAREFREE:
        return FamilyVerdict(ORACLE_MONOGENIC, f"{value} is squarefree", f)
    if status.verdict == "not_squarefree":
        return FamilyVerdict(
            ORACLE_NOT_MONOGENIC, f"{value} is divisible by {status.witness}^2", f
        )
    return FamilyVerdict(ORACLE_NOT_APPLICABLE, f"{value} resisted factorization", f)


def _two_three_split(n: int) -> tuple[int, int] | None:
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    l = 0
    while n % 3 == 0:
        n //= 3
        l += 1
    if n != 1 or k < 1 or l < 1:
        return None
    return k, l


def _binomial_oracle(n: int, m: int, effort: EffortConfig) -> FamilyVerdict:
    # Classification for x^n - m, n = 2^k 3^l, m squarefree:
    # monogenic when m != 1 mod 4 and m != +-1 mod 9; the field is not
    # monogenic when m = 1 mod 4, m = 1 mod 9, or (k = 2 and m = -1 mod 9).
    split = _two_three_split(n)
    if split is None:
        return FamilyVerdict(ORACLE_NOT_APPLICABLE, "n is not of the form 2^k 3^l")
    k, _ = split
    if abs(m) < 2:
        return FamilyVerdict(ORACLE_NOT_APPLICABLE, "need |m| >= 2")
    status = squarefree_status(m, effort)
    if status.verdict != SQUAREFREE:
        return FamilyVerdict(ORACLE_NOT_APPLICABLE, f"m = {m} is not squarefree")
    f = IntPoly((-m,) + (0,) * (n - 1) + (1,))
    m4 = m % 4
    m9 = m % 9
    if m4 != 1 and m9 not in (1, 8):
        return FamilyVerdict(
            ORACLE_MONOGENIC, f"m = {m}: m != 1 mod 4 and m != +-1 mod 9", f
        )
    if m4 == 1 or m9 == 1 or (k == 2 and m9 == 8):
        return FamilyVerdict(
            ORACLE_NOT_MONOGENIC,
            f"m = {m}: congruence obstruction (field not monogenic)",
            f,
        )
    return FamilyVerdict(
        ORACLE_NOT_APPLICABLE, f"m = {m}: no clause of the classification applies", f
    )


def _squarefree_kernel(n: int) -> int:
    kernel = 1
    fact = factorize(n)
    if not fact.is_complete:
        raise ValueError("kernel argument too hard to factor")
    for p, _ in fact.factors:
        kernel *= p
    return kernel


def _trinomial_oracle(n: int, m: int, a: int, b: int, effort: EffortConfig) -> FamilyVerdict:
    # x^n + A x^m + B is monogenic when: m is a proper divisor of n,
    # A, B > 0, gcd(A, B) > 1 and divisible by the squarefree kernel of m,
    # and both B and D = (t^t B^(t-1) + (1-t)^(t-1) A^t) / gcd(A, B)^(t-1)
    # are squarefree, where t = n / m.
    if n < 2 or m < 1 or m >= n or n % m != 0:
        return FamilyVerdict(ORACLE_NOT_APPLICABLE, "m must be a proper divisor of n")
    if a < 1 or b < 1:
        return FamilyVerdict(ORACLE_NOT_APPLICABLE, "A and B must be positive")
    g = math.gcd(a, b)
    if g <= 1:
        return FamilyVerdict(ORACLE_NOT_APPLICABLE, "gcd(A, B) must exceed 1")
    kappa = _squarefree_kernel(m)
    if g % kappa != 0:
        return FamilyVerdict(
            ORACLE_NOT_APPLICABLE, "gcd(A, B) not divisible by the kernel of m"
        )
    t = n // m
    numerator = t ** t * b ** (t - 1) + (1 - t) ** (t - 1) * a ** t
    denom = g ** (t - 1)
    d_value, rem = divmod(numerator, denom)
    if rem or d_value == 0:
        return FamilyVerdict(ORACLE_NOT_APPLICABLE, "D is not a nonzero integer")
    coeffs = [0] * (n + 1)
    coeffs[0] = b
    coeffs[m] = a
    coeffs[n] = 1
    f = IntPoly(coeffs)
    if (
        squarefree_status(b, effort).verdict == SQUAREFREE
        and squarefree_status(d_value, effort).verdict == SQUAREFREE
    ):
        return FamilyVerdict(
            ORACLE_MONOGENIC, f"B = {b} and D = {d_value} are squarefree", f
        )
    return FamilyVerdict(
        ORACLE_NOT_APPLICABLE, f"B = {b} or D = {d_value} is not squarefree", f
    )


def family_oracle(
    family: str, effort: EffortConfig = DEFAULT_EFFORT, **params
) -> FamilyVerdict:
    """Expected verdict for a family instance, or not_applicable.

    Families: "xn-x-1" (param n), "binomial12" (param m, degree fixed at
    12; param n overrides for other 2^k 3^l degrees), "trinomial-axmb"
    (params n, m, a, b).
    """
    if family == FAMILY_XN_X_1:
        return _xn_x_1_oracle(int(params["n"]), effort)
    if family == FAMILY_BINOMIAL_12:
        n = int(params.get("n", 12))
        return _binomial_oracle(n, int(params["m"]), effort)
    if family == FAMILY_TRINOMIAL:
        return _trinomial_oracle(
            int(params["n"]), int(params["m"]), int(params["a"]), int(params["b"]), effort
        )
    raise ValueError(f"unknown family {family!r}")
