"""Numerical semigroup fundamentals.

A numerical semigroup S = <d_1, ..., d_k> is the set of nonnegative integer
combinations of its generators; it is cofinite in the naturals exactly when
gcd(d_1, ..., d_k) = 1. Everything downstream rests on the Apery set with
respect to the smallest generator m = d_1: the least element of S in each
residue class mod m. From it,

    F(S)  = max_r w_r - m          (Frobenius number, largest non-element)
    genus = sum_r (w_r - r) / m    (number of gaps)
    n in S  <=>  n >= 0 and n >= w_{n mod m}

All arithmetic is exact integer arithmetic; nothing here rounds.
"""

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd

from . import _kernels
from .errors import (
    DefectError,
    DuplicateGenerator,
    EmptyInput,
    GcdNotOne,
    GeneratorBelowTwo,
)


@dataclass(frozen=True)
class GeneratorSet:
    """Strictly increasing generators with their sum (sigma) and product (pi)."""

    elements: tuple[int, ...]
    sigma: int
    pi: int


@dataclass(frozen=True)
class AperyTable:
    """entries[r] is the least element of S congruent to r mod modulus."""

    modulus: int
    entries: tuple[int, ...]


def generator_set(values) -> GeneratorSet:
    """Validate and normalize a generator list.

    Input may be unsorted; duplicates are an error rather than being
    silently collapsed, values below 2 are rejected, and the gcd must be 1.
    """
    values = list(values)
    if not values:
        raise EmptyInput("no generators given")
    for v in values:
        if v < 2:
            raise GeneratorBelowTwo(v)
    elems = sorted(values)
    for a, b in zip(elems, elems[1:]):
        if a == b:
            raise DuplicateGenerator(a)
    g = reduce(gcd, elems)
    if g != 1:
        raise GcdNotOne(g)
    prod = 1
    for v in elems:
        prod *= v
    return GeneratorSet(elements=tuple(elems), sigma=sum(elems), pi=prod)


@lru_cache(maxsize=4096)
def _apery_entries(elements: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(_kernels.apery_levels(elements))


def apery_set(g: GeneratorSet) -> AperyTable:
    """Apery set of S with respect to the smallest generator."""
    return AperyTable(modulus=g.elements[0], entries=_apery_entries(g.elements))


def frobenius(g: GeneratorSet) -> int:
    """Largest integer not in S."""
    t = apery_set(g)
    return max(t.entries) - t.modulus


def genus(g: GeneratorSet) -> int:
    """Number of gaps (positive integers outside S)."""
    t = apery_set(g)
    m = t.modulus
    return sum((w - r) // m for r, w in enumerate(t.entries))


def is_member(g: GeneratorSet, n: int) -> bool:
    """Membership test via the Apery table."""
    if n < 0:
        return False
    t = apery_set(g)
    return n >= t.entries[n % t.modulus]


def is_symmetric(g: GeneratorSet) -> bool:
    """Symmetry (Gorenstein) test: genus = (F+1)/2, with F odd.

    Cross-checked against the defining pairing x in S <=> F-x not in S over
    0..F; the two tests agreeing is a law, so disagreement raises a defect.
    """
    t = apery_set(g)
    m, w = t.modulus, t.entries
    fr = max(w) - m
    by_genus = fr % 2 == 1 and genus(g) == (fr + 1) // 2
    by_pairing = all((n >= w[n % m]) != (fr - n >= w[(fr - n) % m]) for n in range(fr + 1))
    if by_genus != by_pairing:
        raise DefectError(
            f"symmetry self-check disagrees on {g.elements}: "
            f"genus test {by_genus}, pairing test {by_pairing}"
        )
    return by_genus


def redundant_generator(g: GeneratorSet):
    """First generator representable by the others, or None if minimal."""
    for i, d in enumerate(g.elements):
        others = g.elements[:i] + g.elements[i + 1 :]
        if _kernels.representable_mask(others, d)[d]:
            return d
    return None


def is_minimal_generating_set(g: GeneratorSet) -> bool:
    """True iff no generator is a nonnegative combination of the others."""
    return redundant_generator(g) is None
