"""Pure-Python kernels: reference implementations of the hot loops.

The compiled module ``_ckernels`` mirrors these exactly. The dispatch layer
in ``__init__`` prefers the compiled versions when built, and falls back
here for inputs outside their int64-safe range (all arithmetic below is
arbitrary-precision, so nothing can overflow).
"""

import heapq


def apery_levels(gens):
    """Least semigroup element in each residue class mod the smallest generator.

    Single-source shortest paths from residue 0 on the graph whose nodes are
    0..m-1 (m = gens[0]) and whose edges are r -> (r + d) % m with weight d,
    one edge family per generator beyond the first. Generators divisible by
    m are self-loops and are skipped.
    """
    m = gens[0]
    steps = [(d % m, d) for d in gens[1:] if d % m]
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        w, r = heapq.heappop(heap)
        if w != dist[r]:
            continue
        for s, d in steps:
            r2 = r + s
            if r2 >= m:
                r2 -= m
            w2 = w + d
            if dist[r2] is None or w2 < dist[r2]:
                dist[r2] = w2
                heapq.heappush(heap, (w2, r2))
    return dist


def representable_mask(gens, limit):
    """Byte mask over 0..limit: 1 where the value is a sum of generators."""
    mask = bytearray(limit + 1)
    mask[0] = 1
    for d in gens:
        for n in range(d, limit + 1):
            if mask[n - d]:
                mask[n] = 1
    return mask


def numerator_terms(levels, gens, length):
    """Nonzero (exponent, coefficient) pairs of the series-times-binomials product.

    Builds the membership indicator array up to ``length`` from the Apery
    levels, then applies one subtract-shift pass per generator; the result is
    the coefficient array of H(S;z) * prod(1 - z^d) truncated at ``length``.
    """
    m = gens[0]
    a = [1 if n >= levels[n % m] else 0 for n in range(length + 1)]
    for d in gens:
        for n in range(length, d - 1, -1):
            a[n] -= a[n - d]
    return [(e, c) for e, c in enumerate(a) if c]
