"""Dedekind's index criterion and the splitting of primes it certifies.

For monic irreducible f with root alpha and a prime p, write
fbar = prod phibar_i^(l_i) in F_p[x].  Lift each phibar_i to Z[x] with
coefficients in [0, p) and set M = (f - prod phi_i^(l_i)) / p, which has
integer coefficients.  Then p does not divide (Z_K : Z[alpha]) exactly when
for every i either l_i = 1 or phibar_i does not divide Mbar.  When p does
not divide the index, p Z_K factors as prod p_i^(l_i) with residue degree
deg(phi_i), which is the splitting type reported here.

The lift convention matters for M itself but not for the divisibility
conclusions; [0, p) is fixed so reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime
from .poly import IntPoly, ModPoly, factor_mod_p


@dataclass(frozen=True)
class SplittingType:
    """Multiset of (ramification index e, residue degree f) above a prime."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))
        for e, f in self.pairs:
            if e < 1 or f < 1:
                raise ValueError("splitting entries must be positive")

    @property
    def degree_sum(self) -> int:
        return sum(e * f for e, f in self.pairs)

    def residue_degree_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for _, f in self.pairs:
            counts[f] = counts.get(f, 0) + 1
        return counts

    def __str__(self):
        return " ".join(f"(e={e}, f={f})" for e, f in self.pairs)


@dataclass(frozen=True)
class DedekindResult:
    """Outcome of the criterion at one prime.

    witness is a factor phibar_i with l_i >= 2 dividing Mbar, present
    exactly when divides_index is true; splitting is present exactly when
    it is false.
    """

    p: int
    divides_index: bool
    witness: ModPoly | None
    splitting: SplittingType | None

    def __post_init__(self):
        if self.divides_index and self.witness is None:
            raise ValueError("divides_index requires a witness factor")
        if not self.divides_index and self.splitting is None:
            raise ValueError("a negative result requires a splitting type")


def dedekind_test(f: IntPoly, p: int, seed: int = 0) -> DedekindResult:
    """Decide whether p divides the index of f, by Dedekind's criterion."""
    if not f.is_monic:
        raise ValueError("f must be monic")
    if f.degree < 1:
        raise ValueError("f must be non-constant")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")

    factors = factor_mod_p(f, p, seed=seed)
    product = IntPoly.const(1)
    for phibar, mult in factors:
        product = product * phibar.lift() ** mult
    difference = f - product
    m_coeffs = []
    for c in difference.coeffs:
        q, r = divmod(c, p)
        if r:
            raise ArithmeticError("f and its lifted factorization differ mod p")
        m_coeffs.append(q)
    mbar = ModPoly(p, m_coeffs)

    for phibar, mult in factors:
        if mult >= 2 and phibar.divides(mbar):
            return DedekindResult(p, True, phibar, None)

    splitting = SplittingType(
        tuple((mult, phibar.degree) for phibar, mult in factors)
    )
    if splitting.degree_sum != f.degree:
        raise ArithmeticError("splitting degrees do not add up to deg f")
    return DedekindResult(p, False, None, splitting)
