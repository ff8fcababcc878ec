"""Shared fixtures and the brute-force oracle.

The oracle functions here are deliberately independent of the package:
plain coin-problem dynamic programming over a byte mask, no Apery sets, no
shortest paths. They are the ground truth the fast paths are checked
against.
"""

import pytest


def oracle_mask(gens, limit):
    """Coin DP: mask[n] = 1 iff n is a nonnegative combination of gens."""
    mask = bytearray(limit + 1)
    mask[0] = 1
    for d in gens:
        for n in range(d, limit + 1):
            if mask[n - d]:
                mask[n] = 1
    return mask


def oracle_frobenius(gens):
    """Largest unrepresentable integer; DP limit min(gens)*sum(gens) is safe
    because every Apery element is a sum of at most min(gens)-1 generators."""
    limit = min(gens) * sum(gens)
    mask = oracle_mask(gens, limit)
    for n in range(limit, -1, -1):
        if not mask[n]:
            return n
    return -1


def oracle_genus(gens):
    fr = oracle_frobenius(gens)
    mask = oracle_mask(gens, max(fr, 0))
    return sum(1 for n in range(1, fr + 1) if not mask[n])


@pytest.fixture(scope="session")
def oracle():
    class Oracle:
        mask = staticmethod(oracle_mask)
        frobenius = staticmethod(oracle_frobenius)
        genus = staticmethod(oracle_genus)

    return Oracle
