"""Exact integer arithmetic services: primality, factorization, valuations.

Factorization is tuned for "desk scale" inputs (polynomial discriminants of
at most a few hundred bits): trial division up to a configurable bound, a
perfect-power check, then a bounded number of Brent-cycle Pollard rho
rounds.  Whatever survives is returned as an explicit composite cofactor
instead of raising, so callers decide how much an incomplete factorization
hurts them.  Everything here is deterministic for a fixed effort setting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Miller-Rabin with this base set is deterministic below 3.317e24
# (Sorenson-Webster); larger inputs get extra fixed bases and the test
# becomes heuristic, which is fine for desk-scale discriminants.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BELOW = 3_317_044_064_679_887_385_961_981
_MR_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

SQUAREFREE = "squarefree"
NOT_SQUAREFREE = "not_squarefree"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class EffortConfig:
    """Budget knobs for factorization work.

    trial_limit: largest trial divisor tried (inclusive).
    rho_rounds: number of Pollard rho restarts (distinct polynomials).
    rho_iterations: iteration cap per rho round.
    """

    trial_limit: int = 1_000_000
    rho_rounds: int = 32
    rho_iterations: int = 200_000


DEFAULT_EFFORT = EffortConfig()


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test, deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES
    if n >= _MR_DETERMINISTIC_BELOW:
        bases = _MR_BASES + _MR_EXTRA_BASES
    for a in bases:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2 or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _perfect_power(n: int) -> tuple[int, int] | None:
    """Return (r, k) with r**k == n and k >= 2, or None."""
    for k in range(2, n.bit_length() + 1):
        r = _iroot(n, k)
        if r < 2:
            break
        if r ** k == n:
            return r, k
    return None


def _pollard_brent(n: int, c: int, max_iterations: int) -> int | None:
    """One Brent-cycle Pollard rho round with polynomial x^2 + c mod n.

    Returns a nontrivial factor or None if the iteration budget runs out.
    Deterministic: the start value and batch size are fixed.
    """
    if n % 2 == 0:
        return 2
    y, r, q = 2, 1, 1
    g = 1
    x = ys = y
    iterations = 0
    batch = 128
    while g == 1 and iterations < max_iterations:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(batch, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += batch
        iterations += r
        r *= 2
    if g == n:
        # The batched gcd collapsed; replay one step at a time.
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    if 1 < g < n:
        return g
    return None


@dataclass(frozen=True)
class Factorization:
    """Partial factorization of a nonzero integer.

    factors lists (prime, exponent) with strictly increasing primes; the
    cofactor is 1 or a composite with no prime factor below the trial
    division limit used to produce it, and is coprime to every listed
    prime.  value keeps the sign.
    """

    value: int
    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1

    def reconstruct(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p ** e
        return out

    @property
    def is_complete(self) -> bool:
        return self.cofactor == 1

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def divisors(self) -> list[int] | None:
        """Sorted positive divisors, or None while a cofactor remains."""
        if not self.is_complete:
            return None
        divs = [1]
        for p, e in self.factors:
            divs = [d * p ** i for d in divs for i in range(e + 1)]
        return sorted(divs)


def factorize(n: int, effort: EffortConfig = DEFAULT_EFFORT) -> Factorization:
    """Factor n (nonzero) within the given effort budget."""
    if n == 0:
        raise ValueError("cannot factor 0")
    m = abs(n)
    found: dict[int, int] = {}

    def record(p, k=1):
        found[p] = found.get(p, 0) + k

    # Trial division by 2, 3, then 6k +- 1.
    for p in (2, 3):
        while m % p == 0:
            record(p)
            m //= p
    d = 5
    limit = max(effort.trial_limit, 3)
    while d <= limit and d * d <= m:
        for q in (d, d + 2):
            while m % q == 0:
                record(q)
                m //= q
        d += 6
    if m > 1 and m < limit * limit:
        # Trial division ran past sqrt(m), so what remains is prime.
        record(m)
        m = 1

    cofactors: list[int] = []
    pending = [m] if m > 1 else []
    while pending:
        c = pending.pop()
        if c == 1:
            continue
        if is_prime(c):
            record(c)
            continue
        power = _perfect_power(c)
        if power is not None:
            root, k = power
            pending.extend([root] * k)
            continue
        g = None
        for round_index in range(effort.rho_rounds):
            g = _pollard_brent(c, round_index + 1, effort.rho_iterations)
            if g is not None:
                break
        if g is None:
            cofactors.append(c)
        else:
            pending.extend([g, c // g])

    cofactor = 1
    for c in cofactors:
        cofactor *= c
    return Factorization(
        value=n,
        factors=tuple(sorted(found.items())),
        cofactor=cofactor,
    )


def valuation(n: int, p: int) -> int:
    """Largest k with p**k dividing n; rejects n == 0."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    k = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class SquarefreeStatus:
    """Outcome of a squarefree test: verdict plus a witness when available.

    verdict is one of SQUAREFREE, NOT_SQUAREFREE, UNKNOWN.  The witness is
    a prime with square dividing |n|; it can be None only in the corner
    case where a square of an unfactored composite was detected.
    """

    verdict: str
    witness: int | None = None

    @property
    def is_squarefree(self) -> bool:
        return self.verdict == SQUAREFREE


def squarefree_status(n: int, effort: EffortConfig = DEFAULT_EFFORT) -> SquarefreeStatus:
    """Decide whether |n| is squarefree, within the effort budget."""
    if n == 0:
        raise ValueError("0 is not squarefree")
    fact = factorize(n, effort)
    for p, e in fact.factors:
        if e >= 2:
            return SquarefreeStatus(NOT_SQUAREFREE, p)
    if fact.cofactor == 1:
        return SquarefreeStatus(SQUAREFREE)
    power = _perfect_power(fact.cofactor)
    if power is not None:
        root, _ = power
        root_fact = factorize(root, effort)
        witness = root_fact.factors[0][0] if root_fact.factors else None
        return SquarefreeStatus(NOT_SQUAREFREE, witness)
    return SquarefreeStatus(UNKNOWN)
