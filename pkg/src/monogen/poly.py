"""Exact univariate polynomial arithmetic over Z, F_p, and F_p[x]/(phi).

Conventions used throughout:

* ``IntPoly`` stores integer coefficients ascending by degree with no
  trailing zeros; the zero polynomial is the empty tuple.
* ``ModPoly`` stores residues in [0, p) the same way.
* Elements of a residue field F_p[x]/(phi) are fixed-length tuples of
  residues (length deg phi, ascending), so they hash, compare and sort
  canonically.  Polynomials over such a field are tuples of elements,
  ascending, trailing zeros trimmed.
* Factorization over a finite field runs squarefree decomposition, then
  distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
  driven by a seeded generator.  Factor lists are sorted by (degree,
  coefficient tuple), so reports are byte-stable and independent of the
  seed.

Resultants are computed as Sylvester determinants with fraction-free
Bareiss elimination: slower than a subresultant chain but exact, simple,
and plenty fast at desk scale (degree <= 25 or so).
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .arith import is_prime

# ---------------------------------------------------------------------------
# Integer polynomials


class IntPoly:
    """Dense univariate polynomial over Z."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return IntPoly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(other * c for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = IntPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def divmod_monic(self, g: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Exact division with remainder by a monic divisor."""
        if g.is_zero or not g.is_monic:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dg = g.degree
        if len(rem) - 1 < dg:
            return IntPoly(), IntPoly(rem)
        quot = [0] * (len(rem) - dg)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k]
            if c:
                quot[k - dg] = c
                for j, gc in enumerate(g.coeffs):
                    rem[k - dg + j] -= c * gc
        return IntPoly(quot), IntPoly(rem)

    def reduce(self, p: int) -> "ModPoly":
        return ModPoly(p, self.coeffs)


# ---------------------------------------------------------------------------
# Parsing and printing

_SUPERSCRIPT_HINT = "polynomial grammar: integer literals, 'x', operators + - * ^"


class ParseError(ValueError):
    """Syntax error in polynomial text, with a 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == ".":
                raise ParseError("non-integer coefficient", i)
            tokens.append(("INT", int(text[i:j]), i))
            i = j
        elif ch == "x":
            tokens.append(("X", None, i))
            i += 1
        elif ch in "+-*^":
            tokens.append((ch, None, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("END", None, n))
    return tokens


def parse_poly(text: str) -> IntPoly:
    """Parse polynomial text such as "x^4 - 2" or "3x^2 + x - 5".

    The grammar accepts integer literals, the variable x, the operators
    + - * ^ with non-negative decimal exponents, and juxtaposition of a
    coefficient with x ("2x").  No parentheses, no nested powers.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos][0]

    def advance():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_factor() -> IntPoly:
        kind, value, at = advance()
        if kind == "INT":
            return IntPoly.const(value)
        if kind == "X":
            if peek() == "^":
                advance()
            else:
                return IntPoly.x()
            kind, value, at = advance()
            if kind != "INT":
                raise ParseError("exponent must be a non-negative integer", at)
            return IntPoly.monomial(value)
        raise ParseError("expected a coefficient or 'x'", at)

    def parse_term() -> IntPoly:
        result = parse_factor()
        while True:
            if peek() == "*":
                advance()
                result = result * parse_factor()
            elif peek() == "X":
                # juxtaposition: coefficient immediately followed by x
                result = result * parse_factor()
            else:
                return result

    result = IntPoly()
    first = True
    while True:
        sign = 1
        kind = peek()
        if kind == "+":
            advance()
        elif kind == "-":
            advance()
            sign = -1
        elif not first:
            _, _, at = tokens[pos]
            if kind == "END":
                break
            raise ParseError("expected '+' or '-' between terms", at)
        if peek() == "END":
            _, _, at = tokens[pos]
            raise ParseError("expected a term", at)
        result = result + sign * parse_term()
        first = False
        if peek() == "END":
            break
    return result


def format_poly(coeffs, var: str = "x", coeff_str=str, coeff_is_one=None) -> str:
    """Render coefficients (ascending) as explicit-sign descending text.

    The '*' between a coefficient and the variable is omitted, matching
    what parse_poly accepts, so printing and parsing round-trip.
    """
    if coeff_is_one is None:
        coeff_is_one = lambda c: c == 1 or c == -1
    terms = []
    items = [(k, c) for k, c in enumerate(coeffs) if c != 0]
    if not items:
        return "0"
    for k, c in reversed(items):
        if isinstance(c, int):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = coeff_str(mag)
            one = mag == 1
        else:
            sign = "+"
            body = coeff_str(c)
            one = coeff_is_one(c)
        if k == 0:
            text = body
        else:
            xk = var if k == 1 else f"{var}^{k}"
            text = xk if one else f"{body}{xk}"
        terms.append((sign, text))
    first_sign, first_text = terms[0]
    out = ("-" if first_sign == "-" else "") + first_text
    for sign, text in terms[1:]:
        out += f" {sign} {text}"
    return out


# ---------------------------------------------------------------------------
# Resultant and discriminant (Bareiss on the Sylvester matrix)


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) = lc(f)^deg(g) * prod g(alpha) over roots alpha of f."""
    if f.is_zero or g.is_zero:
        return 0
    n, m = f.degree, g.degree
    if n == 0:
        return f.coeffs[0] ** m
    if m == 0:
        return g.coeffs[0] ** n
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    size = n + m
    rows = []
    for i in range(m):
        rows.append([0] * i + fd + [0] * (m - 1 - i))
    for i in range(n):
        rows.append([0] * i + gd + [0] * (n - 1 - i))
    assert all(len(r) == size for r in rows)
    return _bareiss_det(rows)


def discriminant(f: IntPoly) -> int:
    """Exact discriminant, (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 2:
        raise ValueError("discriminant requires degree >= 2")
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    value, rem = divmod(sign * res, f.leading)
    if rem:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return value


# ---------------------------------------------------------------------------
# Finite fields: F_p and F_p[x]/(phi)
#
# Both field classes expose the same small protocol (zero, one, add, sub,
# mul, neg, inv, pow, order, char, rand, coerce); the generic polynomial
# factorization below is written against that protocol only.


class PrimeField:
    """F_p with plain int elements."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def char(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def coerce(self, a) -> int:
        return int(a) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        return pow(a, e, self.p)

    def rand(self, rng: random.Random):
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)


# Generic dense polynomials over a field: tuples of elements, ascending.


def fq_trim(F, cs) -> tuple:
    cs = list(cs)
    while cs and cs[-1] == F.zero:
        cs.pop()
    return tuple(cs)


def fq_deg(cs) -> int:
    return len(cs) - 1


def fq_add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return fq_trim(F, out)


def fq_sub(F, a, b):
    out = list(a) + [F.zero] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = F.sub(out[i], c)
    return fq_trim(F, out)


def fq_neg(F, a):
    return tuple(F.neg(c) for c in a)


def fq_scale(F, a, s):
    if s == F.zero:
        return ()
    return fq_trim(F, [F.mul(c, s) for c in a])


def fq_mul(F, a, b):
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == F.zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return fq_trim(F, out)


def fq_divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = F.inv(b[-1])
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return (), fq_trim(F, rem)
    quot = [F.zero] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == F.zero:
            continue
        q = F.mul(c, inv_lead)
        quot[k - db] = q
        for j, bc in enumerate(b):
            rem[k - db + j] = F.sub(rem[k - db + j], F.mul(q, bc))
    return fq_trim(F, quot), fq_trim(F, rem)


def fq_mod(F, a, b):
    return fq_divmod(F, a, b)[1]


def fq_monic(F, a):
    if not a:
        return a
    return fq_scale(F, a, F.inv(a[-1]))


def fq_gcd(F, a, b):
    while b:
        a, b = b, fq_mod(F, a, b)
    return fq_monic(F, a)


def fq_pow_mod(F, base, e: int, mod):
    result = (F.one,)
    base = fq_mod(F, base, mod)
    while e:
        if e & 1:
            result = fq_mod(F, fq_mul(F, result, base), mod)
        base = fq_mod(F, fq_mul(F, base, base), mod)
        e >>= 1
    return result


def fq_deriv(F, a):
    out = []
    for i in range(1, len(a)):
        c = a[i]
        s = F.zero
        for _ in range(i % F.char if F.char else i):
            s = F.add(s, c)
        out.append(s)
    return fq_trim(F, out)


def fq_eval(F, a, x):
    out = F.zero
    for c in reversed(a):
        out = F.add(F.mul(out, x), c)
    return out


def _fq_elem_pth_root(F, a):
    # Frobenius is an automorphism, so the p-th root is a^(q/p).
    return F.pow(a, F.order // F.char)


def fq_squarefree_decomposition(F, f):
    """Yun-style decomposition valid in characteristic p.

    Returns [(g, m)] with g monic squarefree, pairwise coprime, and
    f = lc * prod g^m.
    """
    p = F.char
    f = fq_monic(F, f)
    out: list[tuple[tuple, int]] = []

    def accumulate(g, m):
        if fq_deg(g) > 0:
            out.append((g, m))

    c = fq_gcd(F, f, fq_deriv(F, f))
    w = fq_divmod(F, f, c)[0]
    i = 1
    while fq_deg(w) > 0:
        y = fq_gcd(F, w, c)
        accumulate(fq_divmod(F, w, y)[0], i)
        w = y
        c = fq_divmod(F, c, y)[0]
        i += 1
    if fq_deg(c) > 0:
        # c is a p-th power: take the root coefficientwise and recurse.
        root = [F.zero] * (fq_deg(c) // p + 1)
        for j in range(0, len(c), p):
            root[j // p] = _fq_elem_pth_root(F, c[j])
        for g, m in fq_squarefree_decomposition(F, fq_trim(F, root)):
            accumulate(g, m * p)
    merged: dict[tuple, int] = {}
    for g, m in out:
        merged[g] = merged.get(g, 0) + m
    return sorted(merged.items(), key=lambda gm: (gm[1], _fq_sort_key(gm[0])))


def fq_distinct_degree(F, f):
    """Split monic squarefree f into products of same-degree irreducibles."""
    q = F.order
    out = []
    x = ((F.zero, F.one))
    h = x
    g = f
    d = 0
    while fq_deg(g) > 2 * d:
        d += 1
        h = fq_pow_mod(F, h, q, g)
        gd = fq_gcd(F, fq_sub(F, h, x), g)
        if fq_deg(gd) > 0:
            out.append((gd, d))
            g = fq_divmod(F, g, gd)[0]
            h = fq_mod(F, h, g)
    if fq_deg(g) > 0:
        out.append((g, fq_deg(g)))
    return out


def fq_equal_degree(F, f, d: int, rng: random.Random):
    """Cantor-Zassenhaus split of f into its degree-d irreducible factors."""
    n = fq_deg(f)
    if n == d:
        return [f]
    q = F.order
    while True:
        r = fq_trim(F, [F.rand(rng) for _ in range(n)])
        if fq_deg(r) < 1:
            continue
        if F.char == 2:
            # trace map over F_2: r + r^2 + r^4 + ... (q^d = 2^(k*d) terms)
            k = q.bit_length() - 1
            t = r
            acc = r
            for _ in range(k * d - 1):
                t = fq_mod(F, fq_mul(F, t, t), f)
                acc = fq_add(F, acc, t)
            g = acc
        else:
            g = fq_sub(F, fq_pow_mod(F, r, (q ** d - 1) // 2, f), (F.one,))
        h = fq_gcd(F, g, f)
        if 0 < fq_deg(h) < n:
            left = fq_equal_degree(F, h, d, rng)
            right = fq_equal_degree(F, fq_divmod(F, f, h)[0], d, rng)
            return left + right


def _fq_sort_key(poly):
    def scalar_key(c):
        return c if isinstance(c, tuple) else (c,)

    return (fq_deg(poly), tuple(scalar_key(c) for c in poly))


def fq_factor(F, f, seed: int = 0):
    """Complete factorization of nonzero f over F into monic irreducibles.

    Returns (unit, [(factor, multiplicity)]) with factors canonically
    sorted by degree then coefficient tuple.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    unit = f[-1]
    f = fq_monic(F, f)
    rng = random.Random(seed)
    found: dict[tuple, int] = {}
    for g, m in fq_squarefree_decomposition(F, f):
        for prod, d in fq_distinct_degree(F, g):
            for irr in fq_equal_degree(F, prod, d, rng):
                key = fq_monic(F, irr)
                found[key] = found.get(key, 0) + m
    factors = sorted(found.items(), key=lambda km: _fq_sort_key(km[0]))
    return unit, factors


def fq_is_irreducible(F, f) -> bool:
    if fq_deg(f) < 1:
        return False
    if fq_deg(f) == 1:
        return True
    sqf = fq_squarefree_decomposition(F, f)
    if len(sqf) != 1 or sqf[0][1] != 1:
        return False
    ddf = fq_distinct_degree(F, fq_monic(F, f))
    return len(ddf) == 1 and ddf[0][1] == fq_deg(f)


# ---------------------------------------------------------------------------
# ModPoly: polynomials over F_p as a value type


class ModPoly:
    """Dense univariate polynomial over F_p, residues reduced to [0, p)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, p: int) -> "ModPoly":
        return cls(p, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _field(self) -> PrimeField:
        return PrimeField(self.p)

    def _wrap(self, cs) -> "ModPoly":
        return ModPoly(self.p, cs)

    def _check(self, other: "ModPoly"):
        if self.p != other.p:
            raise ValueError("mixed moduli")

    def __eq__(self, other):
        return (
            isinstance(other, ModPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(("ModPoly", self.p, self.coeffs))

    def __repr__(self):
        return f"ModPoly({self.p}, {list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)

    def __add__(self, other):
        self._check(other)
        return self._wrap(fq_add(self._field(), self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return self._wrap(fq_sub(self._field(), self.coeffs, other.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self._wrap(fq_scale(self._field(), self.coeffs, other % self.p))
        self._check(other)
        return self._wrap(fq_mul(self._field(), self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._check(other)
        q, r = fq_divmod(self._field(), self.coeffs, other.coeffs)
        return self._wrap(q), self._wrap(r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def divides(self, other: "ModPoly") -> bool:
        return (other % self).is_zero

    def gcd(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        return self._wrap(fq_gcd(self._field(), self.coeffs, other.coeffs))

    def monic(self) -> "ModPoly":
        return self._wrap(fq_monic(self._field(), self.coeffs))

    def is_irreducible(self) -> bool:
        return fq_is_irreducible(self._field(), self.coeffs)

    def lift(self) -> IntPoly:
        """Lift to Z[x] with coefficients in [0, p)."""
        return IntPoly(self.coeffs)


def factor_mod_p(f: IntPoly, p: int, seed: int = 0) -> list[tuple[ModPoly, int]]:
    """Factor f mod p into monic irreducibles with multiplicities.

    Raises ValueError if f reduces to 0 mod p.  The ordering is canonical
    (degree, then coefficient tuple), so output is reproducible.
    """
    fbar = f.reduce(p)
    if fbar.is_zero:
        raise ValueError(f"polynomial vanishes mod {p}")
    F = PrimeField(p)
    _, factors = fq_factor(F, fbar.coeffs, seed=seed)
    return [(ModPoly(p, g), m) for g, m in factors]


def phi_expansion(f: IntPoly, phi: IntPoly) -> list[IntPoly]:
    """Base-phi digits of f: f = sum a_i phi^i with deg a_i < deg phi."""
    if phi.is_zero or not phi.is_monic:
        raise ValueError("phi must be monic")
    if phi.degree < 1:
        raise ValueError("phi must have degree >= 1")
    digits = []
    rest = f
    while not rest.is_zero:
        rest, digit = rest.divmod_monic(phi)
        digits.append(digit)
    return digits or [IntPoly()]


# ---------------------------------------------------------------------------
# Residue fields F_p[x]/(phi)


class ResidueField:
    """The field F_p[x]/(phi) for monic phi irreducible mod p.

    Elements are tuples of residues of fixed length deg(phi), coefficients
    of the representative of degree < deg(phi), ascending.
    """

    __slots__ = ("p", "phi", "degree", "_reduction_table")

    def __init__(self, p: int, phi: ModPoly, check: bool = True):
        if phi.p != p:
            raise ValueError("phi modulus mismatch")
        if not phi.is_monic or phi.degree < 1:
            raise ValueError("phi must be monic of degree >= 1")
        if check and not phi.is_irreducible():
            raise ValueError(f"phi = {phi} is reducible mod {p}")
        self.p = p
        self.phi = phi
        self.degree = phi.degree
        # x^k mod phi for k = deg .. 2 deg - 2, used by mul.
        table = []
        F = PrimeField(p)
        cur = fq_mod(F, (0,) * self.degree + (1,), phi.coeffs)
        for _ in range(self.degree - 1):
            table.append(self._pad(cur))
            cur = fq_mod(F, fq_mul(F, cur, (0, 1)), phi.coeffs)
        self._reduction_table = table

    def _pad(self, cs) -> tuple:
        return tuple(cs) + (0,) * (self.degree - len(cs))

    @property
    def char(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p ** self.degree

    @property
    def zero(self):
        return (0,) * self.degree

    @property
    def one(self):
        return self._pad((1,))

    def coerce(self, a):
        """Accept an int, a ModPoly of degree < deg(phi), or a tuple."""
        if isinstance(a, int):
            return self._pad((a % self.p,))
        if isinstance(a, ModPoly):
            if a.p != self.p:
                raise ValueError("modulus mismatch")
            if a.degree >= self.degree:
                a = a % self.phi
            return self._pad(a.coeffs)
        if isinstance(a, (tuple, list)):
            cs = [c % self.p for c in a]
            if len(cs) > self.degree:
                return self.coerce(ModPoly(self.p, cs))
            return self._pad(tuple(cs))
        raise TypeError(f"cannot coerce {a!r} into residue field")

    def to_modpoly(self, a) -> ModPoly:
        return ModPoly(self.p, a)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, d = self.p, self.degree
        if d == 1:
            return (a[0] * b[0] % p,)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        out = [c % p for c in conv[:d]]
        for k in range(d, 2 * d - 1):
            c = conv[k] % p
            if c:
                red = self._reduction_table[k - d]
                for i in range(d):
                    out[i] = (out[i] + c * red[i]) % p
        return tuple(out)

    def inv(self, a):
        F = PrimeField(self.p)
        r0, r1 = self.phi.coeffs, fq_trim(F, a)
        if not r1:
            raise ZeroDivisionError("inverse of 0")
        s0, s1 = (), (F.one,)
        while r1:
            q, r = fq_divmod(F, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, fq_sub(F, s0, fq_mul(F, q, s1))
        # r0 = gcd is a nonzero constant since phi is irreducible
        c = F.inv(r0[0])
        return self._pad(fq_scale(F, s0, c))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def rand(self, rng: random.Random):
        return tuple(rng.randrange(self.p) for _ in range(self.degree))

    def format_elem(self, a, var: str = "x") -> str:
        return format_poly(a, var=var)


def format_fq_poly(field: ResidueField, coeffs, var: str = "y") -> str:
    """Render a polynomial over a residue field, e.g. "(x + 1)y^2 + x"."""

    def coeff_str(c):
        text = field.format_elem(c)
        if any(s in text for s in " +-") and text not in ("0", "1"):
            return f"({text})"
        return text

    return format_poly(
        coeffs,
        var=var,
        coeff_str=coeff_str,
        coeff_is_one=lambda c: c == field.one,
    )


def factor_residual(
    g, p: int, phi: ModPoly, seed: int = 0
) -> list[tuple[tuple, int]]:
    """Factor a polynomial over F_phi = F_p[x]/(phi) into irreducibles.

    g is a sequence of coefficients, each an int, ModPoly, or residue
    tuple.  Raises ValueError when phi is reducible mod p.
    """
    field = ResidueField(p, phi, check=True)
    coeffs = fq_trim(field, [field.coerce(c) for c in g])
    if not coeffs:
        raise ValueError("cannot factor the zero polynomial")
    _, factors = fq_factor(field, coeffs, seed=seed)
    return factors


# ---------------------------------------------------------------------------
# Odds and ends used by callers


def gauss_valuation(a: IntPoly, p: int) -> int | None:
    """min p-adic valuation over the coefficients; None for the zero poly."""
    if a.is_zero:
        return None
    v = None
    for c in a.coeffs:
        if c == 0:
            continue
        k = 0
        cc = abs(c)
        while cc % p == 0:
            cc //= p
            k += 1
        v = k if v is None else min(v, k)
        if v == 0:
            return 0
    return v


def poly_matrix_det(rows: list[list[IntPoly]]) -> IntPoly:
    """Determinant of a small matrix of integer polynomials (Laplace)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    out = IntPoly()
    sign = 1
    for j in range(n):
        top = rows[0][j]
        if not top.is_zero:
            minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
            out = out + sign * top * poly_matrix_det(minor)
        sign = -sign
    return out


def slope_fraction(height: int, length: int) -> Fraction:
    """Slope -height/length as an exact fraction."""
    return Fraction(-height, length)
