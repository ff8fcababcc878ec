"""Symmetric-polynomial identities and closed-form Frobenius lower bounds.

For the five exponents a_1..a_5 of a symmetric not-complete-intersection
numerator (degree c, generator product pi4), the following hold exactly:

    8*p3 - 6*p2*p1 + p1^3 = 24*pi4        p1 = 2c
    e1^3 - 4*e2*e1 + 8*e3 = 8*pi4         e1 = 2c      (same identity in
                                                         elementary terms)

where p_k are power sums and e_k elementary symmetric values of the a_j.
Combining with the Maclaurin chain of inequalities among the normalized
e_k forces c^3 >= 25*pi4, hence the lower bound

    F(S) >= cbrt(25*pi4) - sigma          (symmetric, not CI)

reported here alongside the comparison bounds 3*cbrt(pi4) - sigma
(symmetric CI), cbrt(6*pi4) - sigma (nonsymmetric, 4 generators) and
sqrt(3)*sqrt(d1*d2*d3 + 1) - sigma (nonsymmetric, 3 generators).

Every identity and inequality check below runs in exact integer arithmetic
via cross-multiplication; radicals never enter a comparison. Only the
bound values themselves are floats.
"""

import math
from dataclasses import dataclass

from .core import GeneratorSet, frobenius
from .errors import DefectError, NotFourGenerators, NotThreeGenerators
from .hilbert import SemigroupClass, classify


@dataclass(frozen=True)
class SymmetricFunctions:
    """Power sums p1..p3 and elementary symmetric values e1..e5 of five integers."""

    values: tuple[int, ...]
    power_sums: tuple[int, int, int]
    elementary: tuple[int, int, int, int, int]


def _check_five_positive(values):
    values = tuple(values)
    if len(values) != 5:
        raise ValueError(f"expected five values, got {len(values)}")
    if any(v <= 0 for v in values):
        raise ValueError(f"values must be positive: {values}")
    return values


def power_sums(values) -> tuple[int, int, int]:
    """p_k = sum a_j^k for k = 1, 2, 3."""
    values = _check_five_positive(values)
    return (
        sum(values),
        sum(a * a for a in values),
        sum(a * a * a for a in values),
    )


def elementary_symmetric(values) -> tuple[int, int, int, int, int]:
    """e_1..e_5 via the running product prod (x + a_j)."""
    values = _check_five_positive(values)
    e = [1, 0, 0, 0, 0, 0]
    for a in values:
        for r in range(5, 0, -1):
            e[r] += a * e[r - 1]
    return tuple(e[1:])


def symmetric_functions(values) -> SymmetricFunctions:
    values = _check_five_positive(values)
    return SymmetricFunctions(
        values=values,
        power_sums=power_sums(values),
        elementary=elementary_symmetric(values),
    )


def newton_consistency(sf: SymmetricFunctions) -> bool:
    """Newton's identities for the first three power sums, checked exactly.

    p1 = e1,  p2 = e1^2 - 2*e2,  p3 = e1^3 - 3*e2*e1 + 3*e3.
    """
    p1, p2, p3 = sf.power_sums
    e1, e2, e3 = sf.elementary[:3]
    return p1 == e1 and p2 == e1 * e1 - 2 * e2 and p3 == e1**3 - 3 * e2 * e1 + 3 * e3


def maclaurin_chain(sf: SymmetricFunctions) -> bool:
    """Maclaurin's chain e1/5 >= (e2/10)^(1/2) >= (e3/10)^(1/3) >= (e4/5)^(1/4) >= e5^(1/5).

    Each neighbouring comparison is raised to the lcm power and
    cross-multiplied, so the whole chain is decided in integers:

        (e1/5)^2  >= e2/10   <=>   2*e1^2  >= 5*e2
        (e2/10)^3 >= (e3/10)^2  <=>  e2^3  >= 10*e3^2
        (e3/10)^4 >= (e4/5)^3   <=>  e3^4  >= 80*e4^3
        (e4/5)^5  >= e5^4       <=>  e4^5  >= 3125*e5^4
    """
    e1, e2, e3, e4, e5 = sf.elementary
    return (
        2 * e1 * e1 >= 5 * e2
        and e2**3 >= 10 * e3 * e3
        and e3**4 >= 80 * e4**3
        and e4**5 >= 3125 * e5**4
    )


def verify_key_identity(values, c: int, pi4: int) -> bool:
    """Check 8*p3 - 6*p2*p1 + p1^3 = 24*pi4 together with p1 = 2c, exactly.

    The same identity restated in elementary symmetric terms
    (e1^3 - 4*e2*e1 + 8*e3 = 8*pi4, e1 = 2c) is evaluated as well; the two
    forms are algebraically equivalent, so any disagreement is a defect.
    """
    if c <= 0 or pi4 <= 0:
        raise ValueError(f"c and pi4 must be positive, got c={c}, pi4={pi4}")
    sf = symmetric_functions(values)
    p1, p2, p3 = sf.power_sums
    e1, e2, e3 = sf.elementary[:3]
    power_form = 8 * p3 - 6 * p2 * p1 + p1**3 == 24 * pi4 and p1 == 2 * c
    elementary_form = e1**3 - 4 * e2 * e1 + 8 * e3 == 8 * pi4 and e1 == 2 * c
    if power_form != elementary_form:
        raise DefectError(
            f"identity forms disagree for a={sf.values}, c={c}, pi4={pi4}: "
            f"power-sum form {power_form}, elementary form {elementary_form}"
        )
    return power_form


def verify_intermediate_inequalities(values, c: int, pi4: int) -> bool:
    """The exact consequences tying c, e2, e3 and pi4 together.

    For genuine five-exponent data all four hold:

        c*e2 + pi4 == c^3 + e3          (identity)
        25*e3 <= 16*c^3                 (Maclaurin e1 >= 5*(e3/10)^(1/3), e1 = 2c)
        5*e2 <= 8*c^2                   (first Maclaurin step)
        25*c*e2 <= 41*c^3 - 25*pi4      (combination; not universal in c)
    """
    if c <= 0 or pi4 <= 0:
        raise ValueError(f"c and pi4 must be positive, got c={c}, pi4={pi4}")
    sf = symmetric_functions(values)
    e2, e3 = sf.elementary[1], sf.elementary[2]
    return (
        c * e2 + pi4 == c**3 + e3
        and 25 * e3 <= 16 * c**3
        and 5 * e2 <= 8 * c * c
        and 25 * c * e2 <= 41 * c**3 - 25 * pi4
    )


def exact_threshold_check(c: int, pi4: int) -> bool:
    """c >= cbrt(25*pi4), decided as c^3 >= 25*pi4 in integers."""
    if c <= 0 or pi4 <= 0:
        raise ValueError(f"c and pi4 must be positive, got c={c}, pi4={pi4}")
    return c**3 >= 25 * pi4


def refined_cbrt(x) -> float:
    """Cube root via float exponentiation plus one Newton step.

    The refinement y -> (2y + x/y^2)/3 pulls the power-function result to
    within a relative error well under 1e-12.
    """
    if x == 0:
        return 0.0
    y = float(x) ** (1.0 / 3.0)
    return (2.0 * y + x / (y * y)) / 3.0


def _require_four(g: GeneratorSet):
    if len(g.elements) != 4:
        raise NotFourGenerators(len(g.elements))


def bound_symmetric_not_ci(g: GeneratorSet) -> float:
    """cbrt(25*pi4) - sigma: lower bound for symmetric not-CI semigroups."""
    _require_four(g)
    return refined_cbrt(25 * g.pi) - g.sigma


def bound_ci(g: GeneratorSet) -> float:
    """3*cbrt(pi4) - sigma: lower bound for symmetric CI semigroups."""
    _require_four(g)
    return 3.0 * refined_cbrt(g.pi) - g.sigma


def bound_ns4(g: GeneratorSet) -> float:
    """cbrt(6*pi4) - sigma: lower bound for nonsymmetric 4-generated semigroups."""
    _require_four(g)
    return refined_cbrt(6 * g.pi) - g.sigma


def bound_ns3(g: GeneratorSet) -> float:
    """sqrt(3*(d1*d2*d3 + 1)) - sigma: nonsymmetric 3-generator bound.

    Computed unconditionally; the formula's pedigree is for nonsymmetric
    semigroups, which is the caller's concern to respect.
    """
    if len(g.elements) != 3:
        raise NotThreeGenerators(len(g.elements))
    return math.sqrt(3 * (g.pi + 1)) - g.sigma


@dataclass(frozen=True)
class BoundReport:
    """All closed-form bounds for a 4-generated semigroup, optionally with exact data."""

    generators: tuple[int, ...]
    sigma: int
    pi: int
    bound_not_ci: float
    bound_ci: float
    bound_ns: float
    exact_frobenius: int | None = None
    semigroup_class: SemigroupClass | None = None
    tightness: float | None = None


def bound_report(g: GeneratorSet, compute_exact: bool = False) -> BoundReport:
    """Aggregate the three 4-generator bounds; optionally add F, class, tightness.

    Tightness is F divided by the not-CI bound, quantifying how close the
    bound sits to the exact value.
    """
    _require_four(g)
    not_ci = bound_symmetric_not_ci(g)
    report = BoundReport(
        generators=g.elements,
        sigma=g.sigma,
        pi=g.pi,
        bound_not_ci=not_ci,
        bound_ci=bound_ci(g),
        bound_ns=bound_ns4(g),
    )
    if not compute_exact:
        return report
    fr = frobenius(g)
    return BoundReport(
        generators=report.generators,
        sigma=report.sigma,
        pi=report.pi,
        bound_not_ci=report.bound_not_ci,
        bound_ci=report.bound_ci,
        bound_ns=report.bound_ns,
        exact_frobenius=fr,
        semigroup_class=classify(g),
        tightness=fr / not_ci if not_ci != 0.0 else None,
    )
