"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_native`` module.  Group
elements are packed as ``phase | rep << 2`` with ``rep`` a packed {0,1}-vector.
"""

from __future__ import annotations

from typing import Sequence


def _even_mask(genus: int) -> int:
    return int("01" * genus, 2) if genus else 0


def e_mul_packed(x: int, y: int, genus: int) -> int:
    e = _even_mask(genus)
    tx, ax = x & 3, x >> 2
    ty, ay = y & 3, y >> 2
    t = tx + ty + (ax & e & (ay >> 1)).bit_count() - ((ax >> 1) & e & ay).bit_count()
    c = ax ^ ay
    carry = ax & ay
    swapped = ((carry & e) << 1) | ((carry >> 1) & e)
    t += 2 * ((c & swapped).bit_count() & 1)
    return (t & 3) | (c << 2)


def associativity_failure(xs: Sequence[int], ys: Sequence[int], zs: Sequence[int], genus: int) -> int:
    """Index of the first triple with ``(xy)z != x(yz)``, or -1."""
    for n, (x, y, z) in enumerate(zip(xs, ys, zs)):
        if e_mul_packed(e_mul_packed(x, y, genus), z, genus) != e_mul_packed(
            x, e_mul_packed(y, z, genus), genus
        ):
            return n
    return -1


def exhaustive_associativity(genus: int) -> int:
    """Number of non-associative triples in the whole group."""
    order = 4 << (2 * genus)
    bad = 0
    for x in range(order):
        for y in range(order):
            xy = e_mul_packed(x, y, genus)
            for z in range(order):
                if e_mul_packed(xy, z, genus) != e_mul_packed(x, e_mul_packed(y, z, genus), genus):
                    bad += 1
    return bad


def form_census(genus: int) -> tuple[list[int], list[int], list[int]]:
    """Brute-force census of all quadratic forms of the given genus.

    Form ``v`` (packed basis values) is evaluated at every class.  Returns
    ``sums[v] = sum_alpha q_v(alpha)`` and, for every class ``alpha``, the
    number of forms with ``q(alpha) = -1`` whose value sum is positive
    (``counts0``) or negative (``counts1``).
    """
    n = 1 << (2 * genus)
    e = _even_mask(genus)
    quad = [(a & e & (a >> 1)).bit_count() & 1 for a in range(n)]
    sums = [0] * n
    counts0 = [0] * n
    counts1 = [0] * n
    for v in range(n):
        odd = [((a & v).bit_count() + quad[a]) & 1 for a in range(n)]
        s = n - 2 * sum(odd)
        sums[v] = s
        target = counts0 if s > 0 else counts1
        for a in range(n):
            if odd[a]:
                target[a] += 1
    return sums, counts0, counts1
