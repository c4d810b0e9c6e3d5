"""Exact integer row reduction for comparing sublattices of Z^m."""

from __future__ import annotations

from typing import List, Sequence, Tuple

Row = Tuple[int, ...]


def hermite_rows(vectors: Sequence[Sequence[int]]) -> List[Row]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Pivots are positive, entries above a pivot lie in [0, pivot), zero rows
    are dropped.  Two families span the same lattice iff their forms agree.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    width = len(rows[0])
    out: List[List[int]] = []
    col = 0
    while rows and col < width:
        nonzero = [r for r in rows if r[col]]
        zero = [r for r in rows if not r[col]]
        if not nonzero:
            col += 1
            continue
        # Euclid on the column until a single row carries it
        while len(nonzero) > 1:
            nonzero.sort(key=lambda r: abs(r[col]))
            piv = nonzero[0]
            rest = []
            for r in nonzero[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                (rest if r[col] else zero).append(r)
            nonzero = [piv] + rest
        piv = nonzero[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        for prev in out:
            q = prev[col] // piv[col]
            if q:
                prev[:] = [a - q * b for a, b in zip(prev, piv)]
        out.append(piv)
        rows = [r for r in zero if any(r)]
        col += 1
    return [tuple(r) for r in out]


def same_lattice(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    return hermite_rows(a) == hermite_rows(b)


def lattice_rank(vectors: Sequence[Sequence[int]]) -> int:
    return len(hermite_rows(vectors))


def index_of(vectors: Sequence[Sequence[int]]) -> int:
    """Index in Z^m of a full-rank lattice (0 when not full rank)."""
    h = hermite_rows(vectors)
    if not h or len(h) != len(h[0]):
        return 0
    out = 1
    for i, r in enumerate(h):
        out *= r[i]
    return out
