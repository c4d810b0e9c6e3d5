"""Dense GF(2) linear algebra on int bitsets.

A vector over GF(2) is a Python int whose bit j is the j-th coordinate.
A linear map is given by the list of images of the source basis vectors.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence


def _reduce(vectors: Sequence[int]):
    """Row-reduce ``vectors`` keeping track of which inputs form each pivot row.

    Returns (pivots, kernel): ``pivots`` maps a leading bit to
    (reduced vector, combination mask over inputs), and ``kernel`` lists the
    combination masks of inputs that reduce to zero.
    """
    pivots: Dict[int, tuple] = {}
    kernel = []
    for i, v in enumerate(vectors):
        combo = 1 << i
        while v:
            lead = v.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (v, combo)
                break
            pv, pc = pivots[lead]
            v ^= pv
            combo ^= pc
        else:
            kernel.append(combo)
    return pivots, kernel


def rank(vectors: Sequence[int]) -> int:
    basis: Dict[int, int] = {}
    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            if lead not in basis:
                basis[lead] = v
                break
            v ^= basis[lead]
    return len(basis)


def kernel(images: Sequence[int]) -> List[int]:
    """Basis of the kernel, as masks over the source basis."""
    return _reduce(images)[1]


def in_span(v: int, vectors: Sequence[int]) -> bool:
    return rank(list(vectors) + [v]) == rank(vectors)


def solve(images: Sequence[int], target: int) -> Optional[int]:
    """Some source mask x with sum of images[x] == target, or None."""
    pivots, _ = _reduce(images)
    combo = 0
    v = target
    while v:
        lead = v.bit_length() - 1
        if lead not in pivots:
            return None
        pv, pc = pivots[lead]
        v ^= pv
        combo ^= pc
    return combo


def combine(vectors: Sequence[int], mask: int) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out ^= vectors[i]
        mask >>= 1
        i += 1
    return out


def bits(v: int) -> List[int]:
    out = []
    j = 0
    while v:
        if v & 1:
            out.append(j)
        v >>= 1
        j += 1
    return out
