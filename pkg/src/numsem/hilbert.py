"""Hilbert-series numerators and the symmetric 4-generated classification.

The Hilbert series of S is H(S;z) = sum_{s in S} z^s. Multiplying by
prod_i (1 - z^{d_i}) clears all poles and leaves a polynomial N(z) of
degree exactly F + sigma, with constant term 1 and coefficient sum 0.

For a symmetric 4-generated semigroup exactly one of two shapes occurs
(Bresinsky's dichotomy):

  * complete intersection: N is a product of three binomials
        N(z) = (1 - z^{e_1})(1 - z^{e_2})(1 - z^{e_3}),
    with e_1 + e_2 + e_3 - sigma = F;

  * not a complete intersection: N has the twelve-term five-exponent shape
        N(z) = 1 - sum_j z^{a_j} + sum_j z^{c - a_j} - z^c,   j = 1..5,
    with c = F + sigma and sum_j a_j = 2c.

``classify`` decides which by attempting both parses and insisting exactly
one succeeds.
"""

from dataclasses import dataclass
from enum import Enum

from . import _kernels
from .core import GeneratorSet, apery_set, frobenius, is_symmetric, redundant_generator
from .errors import (
    ClassificationContradiction,
    DefectError,
    NotFourGenerators,
    NotMinimal,
    TruncationInconsistency,
)


@dataclass(frozen=True)
class NumeratorPoly:
    """Sparse integer polynomial: (exponent, coefficient) pairs, ascending, nonzero."""

    terms: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def coeff(self, e: int) -> int:
        for exp, c in self.terms:
            if exp == e:
                return c
        return 0

    def coefficient_sum(self) -> int:
        return sum(c for _, c in self.terms)

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def is_antipalindromic(self) -> bool:
        """z^c * N(1/z) == -N(z), i.e. coeff(e) = -coeff(c - e) for all e.

        For an even generator count this holds exactly when the semigroup
        is symmetric; for an odd count the palindromic variant does (the
        top coefficient is (-1)^(k-1), which fixes the only possible sign).
        """
        c = self.degree
        lookup = self.as_dict()
        return all(lookup.get(c - e, 0) == -co for e, co in self.terms)

    def is_palindromic(self) -> bool:
        """z^c * N(1/z) == N(z), i.e. coeff(e) = coeff(c - e) for all e."""
        c = self.degree
        lookup = self.as_dict()
        return all(lookup.get(c - e, 0) == co for e, co in self.terms)


class ClassKind(str, Enum):
    NON_SYMMETRIC = "non_symmetric"
    SYMMETRIC_CI = "symmetric_ci"
    SYMMETRIC_NOT_CI = "symmetric_not_ci"


@dataclass(frozen=True)
class SemigroupClass:
    """Classification result; payload fields populated per kind."""

    kind: ClassKind
    c: int | None = None
    a_list: tuple[int, ...] | None = None
    relation_degrees: tuple[int, int, int] | None = None


def numerator(g: GeneratorSet) -> NumeratorPoly:
    """Hilbert-series numerator H(S;z) * prod(1 - z^{d_i}), exactly.

    Computed over 0..F+sigma+max(d) so the truncation itself is checked:
    any nonzero coefficient above F+sigma would be a defect.
    """
    t = apery_set(g)
    fr = max(t.entries) - t.modulus
    expected_degree = fr + g.sigma
    padded = expected_degree + g.elements[-1]
    terms = _kernels.numerator_terms(t.entries, g.elements, padded)
    junk = [(e, c) for e, c in terms if e > expected_degree]
    if junk:
        raise TruncationInconsistency(
            f"numerator of {g.elements} has terms above degree "
            f"{expected_degree}: {junk[:4]}"
        )
    poly = NumeratorPoly(tuple(terms))
    if poly.degree != expected_degree or poly.coeff(0) != 1:
        raise DefectError(
            f"numerator of {g.elements} malformed: degree {poly.degree} "
            f"(expected {expected_degree}), constant {poly.coeff(0)}"
        )
    return poly


def parse_bresinsky(poly: NumeratorPoly):
    """Match the twelve-term five-exponent shape; return (a_list, c) or None.

    Coefficient magnitudes count as multiset multiplicities, so a repeated
    a_j showing up as a -2 coefficient is handled. The match requires
    constant term +1, top term -z^c, exactly five negative exponents below
    c, and positive exponents equal to {c - a : a in the negatives}.
    """
    c = poly.degree
    if poly.coeff(0) != 1 or poly.coeff(c) != -1:
        return None
    neg: list[int] = []
    pos: list[int] = []
    for e, co in poly.terms:
        if e == 0 or e == c:
            continue
        if co < 0:
            neg.extend([e] * (-co))
        else:
            pos.extend([e] * co)
    if len(neg) != 5:
        return None
    if sorted(c - a for a in neg) != sorted(pos):
        return None
    return tuple(sorted(neg)), c


def peel_ci_product(poly: NumeratorPoly):
    """Factor as a product of exactly three binomials (1 - z^e), or None.

    Repeatedly divides by (1 - z^e) where e is the lowest nonconstant
    exponent, which must carry a negative coefficient; a coefficient of -t
    there simply makes e the lowest exponent t times in a row. Division is
    exact synthetic division; any nonzero remainder aborts the parse.
    """
    if poly.coeff(0) != 1:
        return None
    dense = [0] * (poly.degree + 1)
    for e, co in poly.terms:
        dense[e] = co
    peels = []
    for _ in range(3):
        deg = len(dense) - 1
        lowest = next((e for e in range(1, deg + 1) if dense[e]), None)
        if lowest is None or dense[lowest] > 0:
            return None
        # quotient of dense / (1 - z^lowest): q[j] = dense[j] + q[j - lowest]
        q = dense[:]
        for j in range(lowest, deg + 1):
            q[j] += q[j - lowest]
        if any(q[j] for j in range(deg - lowest + 1, deg + 1)):
            return None
        dense = q[: deg - lowest + 1]
        peels.append(lowest)
    if dense != [1]:
        return None
    return tuple(sorted(peels))


def bresinsky_numerator(a_list, c: int) -> NumeratorPoly:
    """Expand 1 - sum z^{a_j} + sum z^{c-a_j} - z^c into a NumeratorPoly."""
    acc: dict[int, int] = {0: 1, c: -1}
    for a in a_list:
        acc[a] = acc.get(a, 0) - 1
        acc[c - a] = acc.get(c - a, 0) + 1
    terms = tuple(sorted((e, co) for e, co in acc.items() if co))
    return NumeratorPoly(terms)


def binomial_product(degrees) -> NumeratorPoly:
    """Expand prod (1 - z^{e_i}) into a NumeratorPoly."""
    dense = [1]
    for e in degrees:
        nxt = [0] * (len(dense) + e)
        for i, co in enumerate(dense):
            if co:
                nxt[i] += co
                nxt[i + e] -= co
        dense = nxt
    return NumeratorPoly(tuple((e, co) for e, co in enumerate(dense) if co))


def classify(g: GeneratorSet) -> SemigroupClass:
    """Classify a minimally 4-generated semigroup.

    Nonsymmetric inputs classify immediately; symmetric ones must match
    exactly one of the two numerator shapes, anything else being a
    dichotomy violation reported as a defect.
    """
    if len(g.elements) != 4:
        raise NotFourGenerators(len(g.elements))
    red = redundant_generator(g)
    if red is not None:
        raise NotMinimal(red)
    if not is_symmetric(g):
        return SemigroupClass(kind=ClassKind.NON_SYMMETRIC)

    poly = numerator(g)
    five = parse_bresinsky(poly)
    ci = peel_ci_product(poly)
    if (five is None) == (ci is None):
        raise ClassificationContradiction(
            f"symmetric {g.elements}: five-exponent parse "
            f"{'succeeded' if five else 'failed'} and binomial peel "
            f"{'succeeded' if ci else 'failed'}; numerator {poly.terms}"
        )
    fr = frobenius(g)
    if five is not None:
        a_list, c = five
        if sum(a_list) != 2 * c or c != fr + g.sigma:
            raise DefectError(
                f"five-exponent payload of {g.elements} inconsistent: "
                f"a={a_list}, c={c}, F={fr}, sigma={g.sigma}"
            )
        return SemigroupClass(kind=ClassKind.SYMMETRIC_NOT_CI, c=c, a_list=a_list)
    if sum(ci) - g.sigma != fr or min(ci) < 2:
        raise DefectError(
            f"relation degrees of {g.elements} inconsistent: "
            f"e={ci}, F={fr}, sigma={g.sigma}"
        )
    return SemigroupClass(kind=ClassKind.SYMMETRIC_CI, relation_degrees=ci)
