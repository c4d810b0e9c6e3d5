"""Checkerboard-coloured Young tableaux and their white-box calculus.

A shape is a tuple of positive, weakly decreasing row lengths; the empty
tuple is the empty shape.  Boxes are addressed 1-based as (row, column).
The twist fixes the colour of the corner box: black when untwisted, white
when twisted, alternating from there like a checkerboard.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

Shape = Tuple[int, ...]


class TableauError(ValueError):
    """Raised for malformed shapes or inadmissible inputs."""


class Twist(enum.Enum):
    UNTWISTED = 0
    TWISTED = 1

    def __add__(self, other: "Twist") -> "Twist":
        return Twist((self.value + other.value) % 2)

    @classmethod
    def of(cls, twisted: bool) -> "Twist":
        return cls.TWISTED if twisted else cls.UNTWISTED


@dataclass(frozen=True)
class Truncation:
    """(k, n)-truncation: at most k rows and at most n - k columns."""

    k: int
    n: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise TableauError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def width(self) -> int:
        return self.n - self.k

    def admits(self, shape: Shape) -> bool:
        return len(shape) <= self.k and (not shape or shape[0] <= self.width)

    def __str__(self):
        return f"({self.k},{self.n})"


@dataclass(frozen=True)
class Tableau:
    shape: Shape
    twist: Twist = Twist.UNTWISTED

    def __post_init__(self):
        check_shape(self.shape)

    @property
    def degree(self) -> int:
        return sum(self.shape)


def check_shape(shape: Shape) -> None:
    if any(r <= 0 for r in shape):
        raise TableauError(f"row lengths must be positive: {shape}")
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise TableauError(f"rows must be weakly decreasing: {shape}")


def _check_admissible(shape: Shape, tr: Optional[Truncation]) -> None:
    check_shape(shape)
    if tr is not None and not tr.admits(shape):
        raise TableauError(f"shape {shape} is not {tr}-truncated")


def box_is_white(twist: Twist, r: int, c: int) -> bool:
    if r < 1 or c < 1:
        raise TableauError(f"box positions are 1-based, got ({r},{c})")
    odd = (r + c) % 2 == 1
    return odd if twist is Twist.UNTWISTED else not odd


@lru_cache(maxsize=None)
def _addable(shape: Shape, twist: Twist, tr: Optional[Truncation]) -> Tuple[int, ...]:
    rows = []
    for r in range(1, len(shape) + 2):
        length = shape[r - 1] + 1 if r <= len(shape) else 1
        if r > 1 and shape[r - 2] < length:
            continue
        if tr is not None and (r > tr.k or length > tr.width):
            continue
        if box_is_white(twist, r, length):
            rows.append(r)
    return tuple(rows)


def addable_positions(t: Tableau, tr: Optional[Truncation] = None) -> List[int]:
    """Rows (1-based, top first) where a white box may be appended.

    Position i of A(t) is the i-th entry of this list.
    """
    _check_admissible(t.shape, tr)
    return list(_addable(t.shape, t.twist, tr))


def removable_positions(t: Tableau, tr: Optional[Truncation] = None) -> List[int]:
    """Rows whose last box is white and can be removed."""
    _check_admissible(t.shape, tr)
    shape = t.shape
    rows = []
    for r, length in enumerate(shape, start=1):
        below = shape[r] if r < len(shape) else 0
        if length > below and box_is_white(t.twist, r, length):
            rows.append(r)
    return rows


def _with_box(shape: Shape, row: int) -> Shape:
    if row <= len(shape):
        out = list(shape)
        out[row - 1] += 1
        return tuple(out)
    return shape + (1,)


def _without_box(shape: Shape, row: int) -> Shape:
    out = list(shape)
    out[row - 1] -= 1
    return tuple(x for x in out if x)


def add_boxes(t: Tableau, tr: Optional[Truncation], positions) -> Tableau:
    """Return t with a white box added at each of the given positions.

    ``positions`` is a strictly increasing sequence of 1-based indices into
    ``addable_positions(t, tr)``; the empty sequence returns ``t``.
    """
    rows = addable_positions(t, tr)
    positions = list(positions)
    if any(a >= b for a, b in zip(positions, positions[1:])):
        raise TableauError(f"positions must be strictly increasing: {positions}")
    shape = t.shape
    for p in positions:
        if not 1 <= p <= len(rows):
            raise TableauError(f"position {p} out of range 1..{len(rows)}")
    # rows are distinct, so the boxes can be appended in any order
    for p in positions:
        shape = _with_box(shape, rows[p - 1])
    return Tableau(shape, t.twist)


def add_set(t: Tableau, tr: Optional[Truncation]) -> List[Shape]:
    """The shapes of A(t), in position order."""
    return [_with_box(t.shape, r) for r in addable_positions(t, tr)]


def delete_set(t: Tableau, tr: Optional[Truncation] = None) -> List[Shape]:
    """The shapes of D(t)."""
    return [_without_box(t.shape, r) for r in removable_positions(t, tr)]


@dataclass(frozen=True)
class Classification:
    irredundant: bool
    full: bool

    @property
    def even(self) -> bool:
        return self.irredundant and self.full


def classify(t: Tableau, tr: Optional[Truncation] = None) -> Classification:
    return Classification(
        irredundant=not removable_positions(t, tr),
        full=not addable_positions(t, tr),
    )


def is_even(t: Tableau, tr: Optional[Truncation] = None) -> bool:
    return classify(t, tr).even


def is_completely_even(shape: Shape) -> bool:
    """Rows come in equal adjacent pairs of even length: (2a,2a,2b,2b,...)."""
    if len(shape) % 2:
        return False
    return all(shape[i] == shape[i + 1] and shape[i] % 2 == 0 for i in range(0, len(shape), 2))


def _odd_pairs(rows: Shape) -> bool:
    if len(rows) % 2:
        return False
    return all(rows[i] == rows[i + 1] and rows[i] % 2 == 1 for i in range(0, len(rows), 2))


def even_closed_form(t: Tableau, tr: Optional[Truncation] = None) -> bool:
    """Decide evenness from the explicit shape families, without A or D.

    Untwisted: completely even shapes, plus (n-k, odd pairs...) with exactly
    k rows when k(n-k) is odd.  Twisted: (n-k, T) and/or T + 1^k with T
    completely even, depending on the parities of k and n.
    """
    shape = t.shape
    if t.twist is Twist.UNTWISTED:
        if is_completely_even(shape):
            return True
        if tr is None or (tr.k * tr.width) % 2 == 0:
            return False
        return len(shape) == tr.k and shape[0] == tr.width and _odd_pairs(shape[1:])

    if tr is None:
        # no finite bound: a new white row or column is always available
        return False
    k, n = tr.k, tr.n
    if k % 2 == 1 and n % 2 == 0:
        return False

    def row_on_top() -> bool:
        # sigma_{n-k} * T with T completely even
        if tr.width == 0:
            return not shape
        return bool(shape) and shape[0] == tr.width and is_completely_even(shape[1:])

    def column_on_left() -> bool:
        # sigma_{1^k} * T with T completely even
        if k == 0:
            return is_completely_even(shape)
        if len(shape) != k:
            return False
        return is_completely_even(tuple(x - 1 for x in shape if x > 1))

    if k % 2 == 0 and n % 2 == 0:
        return row_on_top() or column_on_left()
    if k % 2 == 1:
        return row_on_top()
    return column_on_left()


def closure(t: Tableau, tr: Optional[Truncation] = None) -> frozenset:
    """All shapes reachable from t by repeatedly adding white boxes."""
    seen = {t.shape}
    stack = [t.shape]
    while stack:
        shape = stack.pop()
        for nxt in add_set(Tableau(shape, t.twist), tr):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return frozenset(seen)


def shape_key(shape: Shape):
    """Sort key: descending lexicographic, so (2,) precedes (1, 1)."""
    return tuple(-x for x in shape) + (1,)


def sort_shapes(shapes) -> List[Shape]:
    return sorted(shapes, key=shape_key)


def partitions(total: int, max_part: Optional[int] = None, max_len: Optional[int] = None) -> Iterator[Shape]:
    """Partitions of ``total`` in descending lexicographic order."""
    if max_part is None:
        max_part = total
    if max_len is None:
        max_len = total
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first, max_len - 1):
            yield (first,) + rest


def shapes_of_degree(tr: Optional[Truncation], degree: int) -> List[Shape]:
    if degree < 0:
        return []
    if tr is None:
        return list(partitions(degree))
    return list(partitions(degree, tr.width, tr.k))


def max_degree_of(tr: Truncation) -> int:
    return tr.k * tr.width


def enumerate_tableaux(
    tr: Optional[Truncation], twist: Twist = Twist.UNTWISTED, max_degree: Optional[int] = None
) -> Dict[int, List[Tableau]]:
    """Admissible tableaux grouped by degree.

    Untruncated enumeration needs ``max_degree``; truncated enumeration
    defaults to the full box.
    """
    if max_degree is None:
        if tr is None:
            raise TableauError("untruncated enumeration needs max_degree")
        max_degree = max_degree_of(tr)
    return {
        d: [Tableau(s, twist) for s in shapes_of_degree(tr, d)] for d in range(max_degree + 1)
    }


def all_shapes(tr: Truncation) -> List[Shape]:
    return [s for d in range(max_degree_of(tr) + 1) for s in shapes_of_degree(tr, d)]


def transpose(shape: Shape) -> Shape:
    if not shape:
        return ()
    return tuple(sum(1 for r in shape if r > c) for c in range(shape[0]))


def irredundant_components(
    tr: Optional[Truncation], twist: Twist = Twist.UNTWISTED, max_degree: Optional[int] = None
) -> Dict[Shape, frozenset]:
    """Map each irredundant shape to its closure; the closures partition all shapes.

    For untruncated input the closures are cut at ``max_degree``.
    """
    by_degree = enumerate_tableaux(tr, twist, max_degree)
    limit = max(by_degree)
    out = {}
    for tabs in by_degree.values():
        for t in tabs:
            if classify(t, tr).irredundant:
                out[t.shape] = frozenset(s for s in closure(t, tr) if sum(s) <= limit)
    return out


def eta_indices(t: Tableau, tr: Optional[Truncation]) -> List[Shape]:
    """Shapes t_{i1..il} with i1 > 1 (the empty choice included).

    Defined for irredundant, non-full t; there are 2^(|A(t)|-1) of them.
    """
    rows = addable_positions(t, tr)
    if not rows:
        raise TableauError(f"{t.shape} is full; it has no eta indices")
    out = []
    rest = range(2, len(rows) + 1)
    for size in range(len(rows)):
        for subset in combinations(rest, size):
            out.append(add_boxes(t, tr, subset).shape)
    return out
