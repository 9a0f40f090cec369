"""Monogenity toolkit: decide whether Z[alpha] is the full ring of integers
of Q(alpha) for a root alpha of a monic irreducible integer polynomial, and
compute all generators of power integral bases in quartic fields by bounded
search.

The p-adic valuation of the index (Z_K : Z[alpha]) is computed per prime by
a discriminant screen, Dedekind's criterion, and Ore's Newton polygon
theorem; quartic index form equations are reduced to a binary cubic form
and quartic Thue equations solved inside explicit boxes.
"""

from .arith import (
    DEFAULT_EFFORT,
    EffortConfig,
    Factorization,
    SquarefreeStatus,
    factorize,
    is_prime,
    squarefree_status,
    valuation,
)
from .poly import (
    IntPoly,
    ModPoly,
    ParseError,
    ResidueField,
    discriminant,
    factor_mod_p,
    factor_residual,
    format_poly,
    parse_poly,
    phi_expansion,
    resultant,
)
from .dedekind import DedekindResult, SplittingType, dedekind_test
from .newton import (
    IndexBound,
    NewtonPolygon,
    NotRegularError,
    OreResult,
    PhiReport,
    ResidualPoly,
    Side,
    counted_lattice_points,
    ore_analysis,
    ore_factorization,
    phi_index,
    principal_polygon,
    residual_polynomial,
)
from .monogenity import (
    INCONCLUSIVE,
    MONOGENIC,
    NOT_MONOGENIC,
    FamilyVerdict,
    MonogenityReport,
    PrimeLedger,
    ReduciblePolynomialError,
    analyze,
    common_index_divisor,
    count_irreducibles,
    family_oracle,
    field_discriminant,
)
from .quartic import (
    BinaryForm,
    GeneratorSolution,
    Parametrization,
    QuarticSearchReport,
    QuarticSetup,
    SearchBounds,
    TernaryQuadraticForm,
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

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EFFORT",
    "EffortConfig",
    "Factorization",
    "SquarefreeStatus",
    "factorize",
    "is_prime",
    "squarefree_status",
    "valuation",
    "IntPoly",
    "ModPoly",
    "ParseError",
    "ResidueField",
    "discriminant",
    "factor_mod_p",
    "factor_residual",
    "format_poly",
    "parse_poly",
    "phi_expansion",
    "resultant",
    "DedekindResult",
    "SplittingType",
    "dedekind_test",
    "IndexBound",
    "NewtonPolygon",
    "NotRegularError",
    "OreResult",
    "PhiReport",
    "ResidualPoly",
    "Side",
    "counted_lattice_points",
    "ore_analysis",
    "ore_factorization",
    "phi_index",
    "principal_polygon",
    "residual_polynomial",
    "INCONCLUSIVE",
    "MONOGENIC",
    "NOT_MONOGENIC",
    "FamilyVerdict",
    "MonogenityReport",
    "PrimeLedger",
    "ReduciblePolynomialError",
    "analyze",
    "common_index_divisor",
    "count_irreducibles",
    "family_oracle",
    "field_discriminant",
    "BinaryForm",
    "GeneratorSolution",
    "Parametrization",
    "QuarticSearchReport",
    "QuarticSetup",
    "SearchBounds",
    "TernaryQuadraticForm",
    "find_generators",
    "index_of_element",
    "parametrize",
    "q0_solution",
    "quadratic_forms",
    "quartic_thue_forms",
    "resolvent_cubic",
    "search_generators",
    "solve_cubic_thue_small",
]
