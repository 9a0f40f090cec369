"""Generators of power integral bases in quartic fields by bounded search.

Let K = Q(xi) with monic quartic minimal polynomial
f = x^4 + a1 x^3 + a2 x^2 + a3 x + a4, and represent candidates as
alpha = (a + x xi + y xi^2 + z xi^3) / d.  Finding all alpha of index m
reduces to the binary cubic form equation

    F(u, v) = u^3 - a2 u^2 v + (a1 a3 - 4 a4) u v^2
              + (4 a2 a4 - a3^2 - a1^2 a4) v^3 = +- i_m,

with i_m = d^6 m / I(xi), together with the ternary quadratic system

    Q1(x, y, z) = u,   Q2(x, y, z) = v.

For each (u, v) the quadric Q0 = u Q2 - v Q1 vanishes on every solution;
a nontrivial zero (x0, y0, z0) with z0 != 0 parametrizes the solutions as
binary quadratics in coprime parameters (p, q) up to an integer factor k
dividing det(C)/d0^2, turning the system into a pair of quartic forms
F1(p, q) = k^2 u, F2(p, q) = k^2 v.  The search enumerates (u, v) in a
box, then (p, q) and k, and finally verifies every candidate triple
against Q1 and Q2 exactly, so anything reported is a true solution; only
completeness is limited to the recorded boxes.  Solutions along the base
direction (p = q = 0) and branches without a usable parametrization fall
back to direct enumeration of the quadratic system.

Triples are reported up to sign (alpha and -alpha have equal index, and
translation by integers is already quotiented out), normalized so the
first nonzero coordinate is positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .poly import IntPoly, discriminant, poly_matrix_det


@dataclass(frozen=True)
class QuarticSetup:
    """Problem instance: quartic f, denominator d, I(xi), and target m."""

    f: IntPoly
    d: int = 1
    n_xi: int = 1
    m: int = 1

    def __post_init__(self):
        if self.f.degree != 4 or not self.f.is_monic:
            raise ValueError("f must be a monic quartic")
        if self.d < 1 or self.n_xi < 1 or self.m < 1:
            raise ValueError("d, n_xi and m must be positive")
        if (self.d ** 6 * self.m) % self.n_xi != 0:
            raise ValueError("d^6 m / n_xi is not an integer: no solutions")

    @property
    def a(self) -> tuple[int, int, int, int]:
        """(a1, a2, a3, a4)."""
        c = self.f.coeffs
        return (c[3], c[2], c[1], c[0])

    @property
    def i_m(self) -> int:
        return self.d ** 6 * self.m // self.n_xi


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous binary form; coeffs[j] multiplies u^(degree-j) v^j."""

    degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient count must be degree + 1")

    def __call__(self, u: int, v: int) -> int:
        out = 0
        for j, c in enumerate(self.coeffs):
            if c:
                out += c * u ** (self.degree - j) * v ** j
        return out

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def dehomogenized(self) -> IntPoly:
        """The form at v = 1, as a polynomial in u (ascending)."""
        return IntPoly(tuple(reversed(self.coeffs)))

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            i = self.degree - j
            u_part = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            v_part = "" if j == 0 else ("v" if j == 1 else f"v^{j}")
            body = (u_part + v_part) or "1"
            mag = abs(c)
            text = body if mag == 1 and body != "1" else f"{mag}{u_part}{v_part}"
            terms.append(("-" if c < 0 else "+", text))
        if not terms:
            return "0"
        sign, text = terms[0]
        out = ("-" if sign == "-" else "") + text
        for sign, text in terms[1:]:
            out += f" {sign} {text}"
        return out


@dataclass(frozen=True)
class TernaryQuadraticForm:
    """q_xx x^2 + q_xy xy + q_yy y^2 + q_xz xz + q_yz yz + q_zz z^2."""

    xx: int
    xy: int
    yy: int
    xz: int
    yz: int
    zz: int

    def __call__(self, x: int, y: int, z: int) -> int:
        return (
            self.xx * x * x
            + self.xy * x * y
            + self.yy * y * y
            + self.xz * x * z
            + self.yz * y * z
            + self.zz * z * z
        )

    def scaled(self, c: int) -> "TernaryQuadraticForm":
        return TernaryQuadraticForm(
            c * self.xx, c * self.xy, c * self.yy, c * self.xz, c * self.yz, c * self.zz
        )

    def minus(self, other: "TernaryQuadraticForm") -> "TernaryQuadraticForm":
        return TernaryQuadraticForm(
            self.xx - other.xx,
            self.xy - other.xy,
            self.yy - other.yy,
            self.xz - other.xz,
            self.yz - other.yz,
            self.zz - other.zz,
        )


def resolvent_cubic(setup: QuarticSetup) -> BinaryForm:
    """The binary cubic form whose values are the admissible (u, v) targets."""
    a1, a2, a3, a4 = setup.a
    return BinaryForm(
        3,
        (
            1,
            -a2,
            a1 * a3 - 4 * a4,
            4 * a2 * a4 - a3 * a3 - a1 * a1 * a4,
        ),
    )


def quadratic_forms(setup: QuarticSetup) -> tuple[TernaryQuadraticForm, TernaryQuadraticForm]:
    """The pair (Q1, Q2) tying (x, y, z) to a cubic-form solution (u, v)."""
    a1, a2, a3, a4 = setup.a
    q1 = TernaryQuadraticForm(
        xx=1,
        xy=-a1,
        yy=a2,
        xz=a1 * a1 - 2 * a2,
        yz=a3 - a1 * a2,
        zz=-a1 * a3 + a2 * a2 + a4,
    )
    q2 = TernaryQuadraticForm(xx=0, xy=0, yy=1, xz=-1, yz=-a1, zz=a2)
    return q1, q2


def solve_cubic_thue_small(F: BinaryForm, rhs: int, bound: int) -> list[tuple[int, int]]:
    """All (u, v) with max(|u|, |v|) <= bound and F(u, v) = +rhs or -rhs.

    Plain box enumeration; complete inside the box only.
    """
    if F.degree != 3:
        raise ValueError("cubic form expected")
    target = abs(rhs)
    c0, c1, c2, c3 = F.coeffs
    out = []
    for u in range(-bound, bound + 1):
        base0 = c0 * u * u * u
        base1 = c1 * u * u
        base2 = c2 * u
        for v in range(-bound, bound + 1):
            value = base0 + v * (base1 + v * (base2 + v * c3))
            if value == target or value == -target:
                out.append((u, v))
    return sorted(out)


def q0_solution(q0: TernaryQuadraticForm, bound: int) -> tuple[int, int, int] | None:
    """Smallest nontrivial zero of Q0 with z != 0 in the box.

    "Smallest" is lexicographic in (|z|, |y|, |x|), positive coordinates
    preferred at equal magnitudes.  Returns None when the box has no zero.
    """
    for az in range(1, bound + 1):
        for ay in range(0, bound + 1):
            for ax in range(0, bound + 1):
                for z in ((az, -az) if az else (0,)):
                    for y in ((ay, -ay) if ay else (0,)):
                        for x in ((ax, -ax) if ax else (0,)):
                            if q0(x, y, z) == 0:
                                return (x, y, z)
    return None


class DegenerateParametrization(ValueError):
    """The base point kills both linear coefficients; no (p, q) family."""


@dataclass(frozen=True)
class Parametrization:
    """Quadratic parametrization of the zero set of Q0 through a base point.

    With x = r x0 + p, y = r y0 + q, z = r z0, the vanishing of Q0 forces
    r (c1 p + c2 q) = c3 p^2 + c4 pq + c5 q^2; clearing denominators gives
    k (x, y, z)^T = C (p^2, pq, q^2)^T with k ranging over the positive
    divisors of det(C)/d0^2, d0 the gcd of the entries of C.
    """

    base: tuple[int, int, int]
    c_linear: tuple[int, int]
    c_quadratic: tuple[int, int, int]
    matrix: tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]
    d0: int
    det: int
    k_divisors: tuple[int, ...]

    def image(self, p: int, q: int) -> tuple[int, int, int]:
        """(k x, k y, k z) for parameters (p, q)."""
        monomials = (p * p, p * q, q * q)
        return tuple(
            sum(c * m for c, m in zip(row, monomials)) for row in self.matrix
        )


def _normalize_sign(values: tuple[int, ...]) -> tuple[int, ...]:
    for v in values:
        if v > 0:
            return values
        if v < 0:
            return tuple(-x for x in values)
    return values


def parametrize(q0: TernaryQuadraticForm, base: tuple[int, int, int]) -> Parametrization:
    """Build the (p, q) parametrization of Q0 = 0 through a zero point.

    The base point is reduced to primitive coordinates first, so scaled
    bases give the same projective parametrization.  Raises
    DegenerateParametrization when both linear coefficients vanish.
    """
    x0, y0, z0 = base
    if q0(x0, y0, z0) != 0:
        raise ValueError("base point is not a zero of Q0")
    if z0 == 0:
        raise ValueError("base point must have z0 != 0")
    g = math.gcd(math.gcd(abs(x0), abs(y0)), abs(z0))
    x0, y0, z0 = x0 // g, y0 // g, z0 // g

    c1 = 2 * q0.xx * x0 + q0.xy * y0 + q0.xz * z0
    c2 = q0.xy * x0 + 2 * q0.yy * y0 + q0.yz * z0
    c3, c4, c5 = -q0.xx, -q0.xy, -q0.yy
    if c1 == 0 and c2 == 0:
        raise DegenerateParametrization("base point is singular on Q0")
    c_all = _normalize_sign((c1, c2, c3, c4, c5))
    content = math.gcd(*(abs(c) for c in c_all))
    if content > 1:
        c_all = tuple(c // content for c in c_all)
    c1, c2, c3, c4, c5 = c_all

    rows = (
        (x0 * c3 + c1, x0 * c4 + c2, x0 * c5),
        (y0 * c3, y0 * c4 + c1, y0 * c5 + c2),
        (z0 * c3, z0 * c4, z0 * c5),
    )
    det = (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )
    entries = [abs(e) for row in rows for e in row]
    d0 = math.gcd(*entries)
    if det == 0:
        k_divisors: tuple[int, ...] = ()
    else:
        k_bound = abs(det)
        if d0 > 1 and det % (d0 * d0) == 0:
            k_bound = abs(det) // (d0 * d0)
        k_divisors = tuple(k for k in range(1, k_bound + 1) if k_bound % k == 0)
    return Parametrization(
        base=(x0, y0, z0),
        c_linear=(c1, c2),
        c_quadratic=(c3, c4, c5),
        matrix=rows,
        d0=d0,
        det=det,
        k_divisors=k_divisors,
    )


def _compose_quadratic(
    q: TernaryQuadraticForm,
    rows: tuple[tuple[int, int, int], ...],
) -> BinaryForm:
    """Binary quartic q(X(p,q), Y(p,q), Z(p,q)) for binary quadratics X, Y, Z."""

    def mul(a, b):
        out = [0] * 5
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return out

    x_row, y_row, z_row = rows
    acc = [0] * 5
    for coeff, (a, b) in (
        (q.xx, (x_row, x_row)),
        (q.xy, (x_row, y_row)),
        (q.yy, (y_row, y_row)),
        (q.xz, (x_row, z_row)),
        (q.yz, (y_row, z_row)),
        (q.zz, (z_row, z_row)),
    ):
        if coeff:
            prod = mul(a, b)
            for i in range(5):
                acc[i] += coeff * prod[i]
    return BinaryForm(4, tuple(acc))


def quartic_thue_forms(
    param: Parametrization,
    q1: TernaryQuadraticForm,
    q2: TernaryQuadraticForm,
) -> tuple[BinaryForm, BinaryForm]:
    """The forms F1, F2 with F1(p, q) = k^2 u and F2(p, q) = k^2 v."""
    return _compose_quadratic(q1, param.matrix), _compose_quadratic(q2, param.matrix)


@dataclass(frozen=True)
class GeneratorSolution:
    """A coordinate triple up to sign, first nonzero coordinate positive."""

    x: int
    y: int
    z: int
    canonical: bool = True

    @classmethod
    def canonicalize(cls, x: int, y: int, z: int) -> "GeneratorSolution":
        x, y, z = _normalize_sign((x, y, z))
        return cls(x, y, z)

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class SearchBounds:
    """Boxes for the staged enumeration; reports always state them."""

    cubic_box: int = 1000
    pq_box: int = 1000
    q0_box: int = 100
    direct_box: int = 100

    def __post_init__(self):
        for value in (self.cubic_box, self.pq_box, self.q0_box, self.direct_box):
            if value < 1:
                raise ValueError("bounds must be positive")


@dataclass(frozen=True)
class BranchReport:
    """One (u, v) branch of the search."""

    uv: tuple[int, int]
    sign: int  # F(u, v) = sign * i_m
    base: tuple[int, int, int] | None
    parametrization: Parametrization | None
    thue_forms: tuple[BinaryForm, BinaryForm] | None
    method: str  # "parametrized" or "direct"
    solutions: tuple[GeneratorSolution, ...]


@dataclass(frozen=True)
class QuarticSearchReport:
    setup: QuarticSetup
    resolvent: BinaryForm
    resolvent_reducible: bool | None
    q1: TernaryQuadraticForm
    q2: TernaryQuadraticForm
    bounds: SearchBounds
    branches: tuple[BranchReport, ...]
    solutions: tuple[GeneratorSolution, ...]


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def _scaled_base_solutions(
    base: tuple[int, int, int],
    q1: TernaryQuadraticForm,
    q2: TernaryQuadraticForm,
    u: int,
    v: int,
) -> list[tuple[int, int, int]]:
    """Solutions t * base of (Q1, Q2) = (u, v); missed by coprime (p, q)."""
    w1, w2 = q1(*base), q2(*base)
    candidates: list[int] = []
    if w1 != 0:
        if u % w1 != 0:
            return []
        t = _isqrt_exact(u // w1)
        if t is None or t == 0:
            return []
        candidates = [t]
    elif u != 0:
        return []
    else:
        if w2 == 0 or v % w2 != 0:
            return []
        t = _isqrt_exact(v // w2)
        if t is None or t == 0:
            return []
        candidates = [t]
    out = []
    for t in candidates:
        x, y, z = t * base[0], t * base[1], t * base[2]
        if q1(x, y, z) == u and q2(x, y, z) == v:
            out.append((x, y, z))
    return out


def _direct_branch(
    setup: QuarticSetup,
    q1: TernaryQuadraticForm,
    q2: TernaryQuadraticForm,
    u: int,
    v: int,
    box: int,
) -> list[tuple[int, int, int]]:
    """Enumerate Q1 = u, Q2 = v over the box by solving Q2 for y.

    Q2 is monic quadratic in y, so for each (x, z) the candidates come
    from a square root check instead of a third loop.
    """
    a1, a2 = setup.a[0], setup.a[1]
    out = []
    for x in range(-box, box + 1):
        for z in range(-box, box + 1):
            # y^2 - (a1 z) y + (a2 z^2 - x z - v) = 0
            b = a1 * z
            c = a2 * z * z - x * z - v
            disc = b * b - 4 * c
            root = _isqrt_exact(disc)
            if root is None:
                continue
            for numerator in {b + root, b - root}:
                if numerator % 2:
                    continue
                y = numerator // 2
                if abs(y) <= box and q1(x, y, z) == u:
                    out.append((x, y, z))
    return out


def _parametrized_branch(
    param: Parametrization,
    q1: TernaryQuadraticForm,
    q2: TernaryQuadraticForm,
    u: int,
    v: int,
    box: int,
) -> list[tuple[int, int, int]]:
    out = []
    pairs = [(0, 1)] + [
        (p, q)
        for p in range(1, box + 1)
        for q in range(-box, box + 1)
        if math.gcd(p, abs(q)) == 1
    ]
    for p, q in pairs:
        kx, ky, kz = param.image(p, q)
        for k in param.k_divisors:
            if kx % k or ky % k or kz % k:
                continue
            x, y, z = kx // k, ky // k, kz // k
            if (x, y, z) == (0, 0, 0):
                continue
            if q1(x, y, z) == u and q2(x, y, z) == v:
                out.append((x, y, z))
    out.extend(_scaled_base_solutions(param.base, q1, q2, u, v))
    return out


def _integer_roots_monic(poly: IntPoly) -> list[int]:
    """Integer roots of a monic integer polynomial (Cauchy bound scan)."""
    if poly.is_zero:
        raise ValueError("zero polynomial")
    roots = []
    if poly.coeffs[0] == 0:
        roots.append(0)
        cs = list(poly.coeffs)
        while cs and cs[0] == 0:
            cs.pop(0)
        poly = IntPoly(cs)
    bound = 1 + max(abs(c) for c in poly.coeffs)
    for r in range(-bound, bound + 1):
        if r != 0 and poly(r) == 0:
            roots.append(r)
    return roots


def cubic_form_reducible(F: BinaryForm) -> bool:
    """Whether a binary cubic form with unit u^3 coefficient factors over Q."""
    if F.degree != 3:
        raise ValueError("cubic form expected")
    if F.coeffs[0] == 0 or F.coeffs[3] == 0:
        return True  # v or u divides the form
    if abs(F.coeffs[0]) != 1:
        raise ValueError("leading coefficient must be a unit")
    poly = F.dehomogenized() * F.coeffs[0]
    return bool(_integer_roots_monic(poly))


def find_generators(setup: QuarticSetup, bounds: SearchBounds = SearchBounds()):
    """Canonical solutions of the index form equation inside the boxes."""
    return search_generators(setup, bounds).solutions


def search_generators(
    setup: QuarticSetup, bounds: SearchBounds = SearchBounds()
) -> QuarticSearchReport:
    """Run the full branch-by-branch search and keep the evidence.

    Every returned triple satisfies Q1 = u, Q2 = v and F(u, v) = +-i_m
    exactly (verified after the fact); completeness holds only within the
    recorded boxes.
    """
    resolvent = resolvent_cubic(setup)
    q1, q2 = quadratic_forms(setup)
    try:
        reducible = cubic_form_reducible(resolvent)
    except ValueError:
        reducible = None
    uv_pairs = solve_cubic_thue_small(resolvent, setup.i_m, bounds.cubic_box)

    branches = []
    all_solutions: set[tuple[int, int, int]] = set()
    for u, v in uv_pairs:
        value = resolvent(u, v)
        sign = 1 if value == setup.i_m else -1
        q0 = q2.scaled(u).minus(q1.scaled(v))
        base = q0_solution(q0, bounds.q0_box)
        param = None
        thue_forms = None
        if base is not None:
            try:
                param = parametrize(q0, base)
            except DegenerateParametrization:
                param = None
        if param is not None and param.k_divisors:
            thue_forms = quartic_thue_forms(param, q1, q2)
            method = "parametrized"
            triples = _parametrized_branch(param, q1, q2, u, v, bounds.pq_box)
        else:
            method = "direct"
            triples = _direct_branch(setup, q1, q2, u, v, bounds.direct_box)
        solutions = sorted(
            {GeneratorSolution.canonicalize(*t).triple for t in triples}
        )
        for t in solutions:
            assert q1(*t) == u and q2(*t) == v
            assert abs(resolvent(u, v)) == setup.i_m
        all_solutions.update(solutions)
        branches.append(
            BranchReport(
                uv=(u, v),
                sign=sign,
                base=base,
                parametrization=param,
                thue_forms=thue_forms,
                method=method,
                solutions=tuple(GeneratorSolution(*t) for t in solutions),
            )
        )

    final = tuple(GeneratorSolution(*t) for t in sorted(all_solutions))
    return QuarticSearchReport(
        setup=setup,
        resolvent=resolvent,
        resolvent_reducible=reducible,
        q1=q1,
        q2=q2,
        bounds=bounds,
        branches=tuple(branches),
        solutions=final,
    )


# ---------------------------------------------------------------------------
# Independent oracle: the index of an explicit element via discriminants


def element_characteristic_poly(f: IntPoly, xyz: tuple[int, int, int]) -> IntPoly:
    """Characteristic polynomial of x xi + y xi^2 + z xi^3 acting on Q(xi)."""
    if f.degree != 4 or not f.is_monic:
        raise ValueError("f must be a monic quartic")
    x, y, z = xyz
    g = IntPoly((0, x, y, z))
    columns = []
    for j in range(4):
        _, rem = (g * IntPoly.monomial(j)).divmod_monic(f)
        columns.append([rem[i] for i in range(4)])
    # det(t I - M) with M[i][j] = columns[j][i]
    t = IntPoly.x()
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            entry = IntPoly.const(-columns[j][i])
            if i == j:
                entry = entry + t
            row.append(entry)
        rows.append(row)
    return poly_matrix_det(rows)


def index_of_element(
    f: IntPoly,
    xyz: tuple[int, int, int],
    d: int,
    field_disc: int,
) -> int:
    """I(alpha) for alpha = (x xi + y xi^2 + z xi^3)/d, via discriminants.

    Computed as sqrt(D(alpha)/D_K), where D(alpha) is the discriminant of
    the characteristic polynomial of alpha; both the integrality and the
    squareness of the quotient are asserted.  Raises ValueError when alpha
    is not primitive (repeated characteristic roots).
    """
    if d < 1:
        raise ValueError("d must be positive")
    if field_disc == 0:
        raise ValueError("field discriminant must be nonzero")
    charpoly = element_characteristic_poly(f, xyz)
    d_alpha_numerator = discriminant(charpoly)
    if d_alpha_numerator == 0:
        raise ValueError("element is not primitive: repeated conjugates")
    ratio = Fraction(d_alpha_numerator, d ** 12) / field_disc
    if ratio <= 0 or ratio.denominator != 1:
        raise ArithmeticError(
            "D(alpha)/D_K is not a positive integer; inconsistent inputs"
        )
    index = _isqrt_exact(int(ratio))
    if index is None:
        raise ArithmeticError("D(alpha)/D_K is not a perfect square")
    return index
