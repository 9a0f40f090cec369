"""Principal phi-Newton polygons, residual polynomials, and Ore's theorem.

Given monic f, a prime p, and a monic lift phi of an irreducible factor of
f mod p, expand f = sum a_i(x) phi(x)^i and plot the points
(i, v_p(a_i)) for nonzero digits a_i, where v_p is the Gauss valuation
(minimum over coefficients).  The principal polygon is the negative-slope
part of the lower convex hull of those points.  Each side S carries

  length l   = horizontal span,
  height h_S = vertical drop,
  degree d   = gcd(l, h_S),
  slope      = -h/e in lowest terms, so l = e d.

The residue coefficient attached to abscissa s + i on S is
(a_(s+i) / p^(v_i)) mod (p, phi) when the point sits on S and 0 otherwise;
sampling them at multiples of e gives the residual polynomial f_S(y) of
degree d over F_phi = F_p[x]/(phi).

The index contribution ind_phi(f) is deg(phi) times the number of lattice
points with x >= 1 and y >= 1 lying on or below the principal polygon.
Ore's theorem: v_p(ind f) >= sum of ind_phi(f) over the irreducible
factors phi of f mod p, with equality when every residual polynomial of
every side of every phi is squarefree (p-regularity).  In the regular case
the sides and residual factorizations also determine the prime ideal
factorization of p: one prime per irreducible residual factor psi, with
ramification index e of its side and residue degree deg(phi) * deg(psi).

Non-regular polynomials would need higher-order polygons, which this
module does not implement; it reports a lower bound instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime
from .dedekind import SplittingType
from .poly import (
    IntPoly,
    ModPoly,
    ResidueField,
    factor_mod_p,
    fq_trim,
    fq_factor,
    format_fq_poly,
    gauss_valuation,
    phi_expansion,
)


class NotRegularError(ValueError):
    """Raised when a certified factorization shape needs p-regularity."""


@dataclass(frozen=True)
class Side:
    """One side of a principal polygon, with its combinatorial data."""

    start: tuple[int, int]
    end: tuple[int, int]

    def __post_init__(self):
        if self.end[0] <= self.start[0]:
            raise ValueError("side must advance to the right")
        if self.end[1] >= self.start[1]:
            raise ValueError("side must have negative slope")

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def height(self) -> int:
        return self.start[1] - self.end[1]

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.height, self.length)

    @property
    def h(self) -> int:
        return -self.slope.numerator

    @property
    def e(self) -> int:
        return self.slope.denominator

    @property
    def ramification_degree(self) -> int:
        """d = gcd(length, height) = length / e."""
        return math.gcd(self.length, self.height)

    def slope_str(self) -> str:
        return f"-{self.h}/{self.e}"

    def height_at(self, x: int) -> Fraction:
        """Exact height of the side's line at abscissa x."""
        return Fraction(self.start[1]) + self.slope * (x - self.start[0])


def principal_polygon(points) -> list[Side]:
    """Negative-slope part of the lower convex hull of (i, v) points.

    Points with equal abscissa keep the lowest ordinate.  Returns maximal
    sides (collinear segments merged), slopes strictly increasing.  The
    result is empty when no side of negative slope exists.
    """
    best: dict[int, int] = {}
    for i, v in points:
        if i < 0 or v < 0:
            raise ValueError("lattice points must have non-negative coordinates")
        if i not in best or v < best[i]:
            best[i] = v
    if not best:
        raise ValueError("empty point set")
    pts = sorted(best.items())
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # pop while the middle point is on or above the new chord
            if (x2 - x1) * (pt[1] - y1) - (pt[0] - x1) * (y2 - y1) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    sides = []
    for a, b in zip(hull, hull[1:]):
        if b[1] >= a[1]:
            break
        sides.append(Side(a, b))
    return sides


@dataclass(frozen=True)
class NewtonPolygon:
    """Principal polygon of f with respect to (p, phi)."""

    phi: IntPoly
    p: int
    sides: tuple[Side, ...]

    @property
    def vertices(self) -> list[tuple[int, int]]:
        if not self.sides:
            return []
        return [self.sides[0].start] + [s.end for s in self.sides]


def counted_lattice_points(sides) -> list[tuple[int, int]]:
    """Lattice points with x >= 1, y >= 1 on or below the polygon."""
    sides = list(sides)
    if not sides:
        return []
    out = []
    last_x = sides[0].start[0]
    for side in sides:
        for x in range(max(side.start[0], 1), side.end[0] + 1):
            if x == last_x:
                continue
            top = side.height_at(x)
            out.append((x, math.floor(top)))
        last_x = side.end[0]
    points = []
    for x, top in out:
        for y in range(1, top + 1):
            points.append((x, y))
    return sorted(points)


def phi_index(polygon, deg_phi: int = 1) -> int:
    """ind_phi(f): deg(phi) times the lattice count under the polygon."""
    sides = polygon.sides if isinstance(polygon, NewtonPolygon) else polygon
    if deg_phi < 1:
        raise ValueError("deg_phi must be positive")
    return deg_phi * len(counted_lattice_points(sides))


@dataclass(frozen=True)
class ResidualPoly:
    """Residual polynomial of one side, over F_phi = F_p[x]/(phi)."""

    side: Side
    field: ResidueField
    coeffs: tuple[tuple, ...]  # t_0 .. t_d, residue field elements

    def __post_init__(self):
        d = self.side.ramification_degree
        if len(self.coeffs) != d + 1:
            raise ValueError("residual polynomial must have degree d")
        if self.coeffs[0] == self.field.zero or self.coeffs[-1] == self.field.zero:
            raise ValueError("endpoint residue coefficients must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        return format_fq_poly(self.field, self.coeffs)


def _expansion_points(f: IntPoly, phi: IntPoly, p: int):
    digits = phi_expansion(f, phi)
    valuations = [gauss_valuation(a, p) for a in digits]
    points = [(i, v) for i, v in enumerate(valuations) if v is not None]
    return digits, valuations, points


def residual_polynomial(f: IntPoly, phi: IntPoly, p: int, side: Side) -> ResidualPoly:
    """Residue coefficients of one side, sampled at multiples of e.

    The side must belong to the principal polygon of the phi-expansion of
    f; anything else raises ValueError.
    """
    digits, valuations, points = _expansion_points(f, phi, p)
    sides = principal_polygon(points)
    if side not in sides:
        raise ValueError("side does not belong to the principal polygon of f")
    field = ResidueField(p, phi.reduce(p))
    s, v_start = side.start
    e, h, d = side.e, side.h, side.ramification_degree
    coeffs = []
    for j in range(d + 1):
        idx = s + j * e
        line_v = v_start - j * h
        if idx >= len(digits) or digits[idx].is_zero:
            coeffs.append(field.zero)
            continue
        v = valuations[idx]
        if v < line_v:
            raise ArithmeticError("expansion point below its own polygon side")
        if v > line_v:
            coeffs.append(field.zero)
            continue
        scaled = IntPoly(tuple(c // p ** v for c in digits[idx].coeffs))
        coeffs.append(field.coerce(scaled.reduce(p)))
    return ResidualPoly(side=side, field=field, coeffs=tuple(coeffs))


@dataclass(frozen=True)
class ResidualRecord:
    """A side's residual polynomial together with its factorization."""

    residual: ResidualPoly
    factors: tuple[tuple[tuple, int], ...]  # (coeff tuple poly, multiplicity)

    @property
    def squarefree(self) -> bool:
        return all(m == 1 for _, m in self.factors)


@dataclass(frozen=True)
class PhiReport:
    """Everything the polygon says about one irreducible factor phi."""

    phi: IntPoly
    multiplicity: int
    polygon: NewtonPolygon
    residuals: tuple[ResidualRecord, ...]
    index_contribution: int

    @property
    def regular(self) -> bool:
        return all(r.squarefree for r in self.residuals)


@dataclass(frozen=True)
class IndexBound:
    """Either the exact value of v_p(ind f) or a certified lower bound."""

    value: int
    exact: bool

    def __str__(self):
        return f"{'=' if self.exact else '>='}{self.value}"


@dataclass(frozen=True)
class OreResult:
    p: int
    phi_reports: tuple[PhiReport, ...]
    bound: IndexBound

    @property
    def regular(self) -> bool:
        return self.bound.exact


def _phi_report(f: IntPoly, p: int, phibar: ModPoly, mult: int, seed: int) -> PhiReport:
    phi = phibar.lift()
    _, _, points = _expansion_points(f, phi, p)
    if points[0][0] != 0:
        # a_0 = 0 means phi divides f in Z[x]; the caller fed a reducible f
        raise ValueError(f"{phi} divides f over Z; f is not irreducible")
    sides = principal_polygon(points)
    polygon = NewtonPolygon(phi=phi, p=p, sides=tuple(sides))
    residuals = []
    for side in sides:
        residual = residual_polynomial(f, phi, p, side)
        _, factors = fq_factor(residual.field, fq_trim(residual.field, residual.coeffs), seed=seed)
        residuals.append(ResidualRecord(residual=residual, factors=tuple(factors)))
    return PhiReport(
        phi=phi,
        multiplicity=mult,
        polygon=polygon,
        residuals=tuple(residuals),
        index_contribution=phi_index(sides, phi.degree),
    )


def ore_analysis(f: IntPoly, p: int, seed: int = 0) -> OreResult:
    """Per-phi polygon reports and the resulting bound on v_p(ind f).

    The bound is exact exactly when f is p-regular (every residual
    polynomial squarefree); otherwise it is a lower bound and the prime
    stays unresolved at this order.
    """
    if not f.is_monic:
        raise ValueError("f must be monic")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    reports = [
        _phi_report(f, p, phibar, mult, seed)
        for phibar, mult in factor_mod_p(f, p, seed=seed)
    ]
    total = sum(r.index_contribution for r in reports)
    exact = all(r.regular for r in reports)
    return OreResult(p=p, phi_reports=tuple(reports), bound=IndexBound(total, exact))


def splitting_from_reports(result: OreResult, degree: int) -> SplittingType:
    """Prime ideal shape above p from a regular analysis."""
    if not result.regular:
        raise NotRegularError(
            f"polynomial is not {result.p}-regular; factorization shape uncertified"
        )
    pairs = []
    for report in result.phi_reports:
        deg_phi = report.phi.degree
        for side, record in zip(report.polygon.sides, report.residuals):
            for psi, _ in record.factors:
                pairs.append((side.e, deg_phi * (len(psi) - 1)))
    splitting = SplittingType(tuple(pairs))
    if splitting.degree_sum != degree:
        raise ArithmeticError("splitting degrees do not add up to deg f")
    return splitting


def ore_factorization(f: IntPoly, p: int, seed: int = 0) -> SplittingType:
    """Factorization type of p, certified only for p-regular f.

    Raises NotRegularError otherwise; the caller must treat p as
    unresolved rather than trust a partial shape.
    """
    return splitting_from_reports(ore_analysis(f, p, seed=seed), f.degree)


def polygon_sketch(sides, counted: bool = True) -> str:
    """Small ASCII picture of a principal polygon.

    Vertices are 'o', counted lattice points (x >= 1, y >= 1, on or below
    the polygon) are 'x'.
    """
    sides = list(sides)
    if not sides:
        return "(empty principal polygon)"
    verts = [sides[0].start] + [s.end for s in sides]
    vmax = max(v for _, v in verts)
    imax = max(i for i, _ in verts)
    marks = {}
    if counted:
        for pt in counted_lattice_points(sides):
            marks[pt] = "x"
    for pt in verts:
        marks[pt] = "o"
    lines = []
    for v in range(vmax, -1, -1):
        row = "".join(marks.get((i, v), ".") for i in range(imax + 1))
        lines.append(f"{v:>3} | {row}")
    lines.append("    +-" + "-" * (imax + 1))
    ticks = "".join(str(i % 10) for i in range(imax + 1))
    lines.append("      " + ticks)
    return "\n".join(lines)
