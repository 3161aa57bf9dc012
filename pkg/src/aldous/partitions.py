"""Integer partitions, Young diagrams and standard tableaux.

A partition is stored top row first, e.g. Partition((5, 1)). Boxes use
(col, row) coordinates, both 1-based, with content = col - row. A standard
tableau is kept as its removal path: the box removed at step k is the box
holding label k when the diagram is filled in the usual increasing way.

Dominance is decided by the prefix-sum criterion: p dominates q iff
sum(p[:m]) >= sum(q[:m]) for every m. This is the standard equivalent of
reachability by single box drops to lower rows (each drop moves one box
from an earlier prefix to a later one, weakly decreasing every prefix sum;
conversely any prefix-sum gap can be closed one drop at a time).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple, Sequence

import numpy as np


class Box(NamedTuple):
    """A cell of a Young diagram; col is the x coordinate, row the y."""

    col: int
    row: int

    @property
    def content(self) -> int:
        return self.col - self.row


class Partition:
    """Nonincreasing positive integers; the label of an irreducible of S_n."""

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be nonincreasing: {parts}")
        self.parts = parts

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def compact_str(self) -> str:
        """Exponent notation for repeated parts, e.g. '2,1^3'."""
        out = []
        i = 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            run = j - i
            out.append(f"{self.parts[i]}^{run}" if run > 1 else str(self.parts[i]))
            i = j
        return ",".join(out)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse '5,1' or exponent notation '2,1^3' into a Partition."""
    if not isinstance(text, str) or not text.strip():
        raise ValueError("empty partition text")
    parts: list[int] = []
    for token in text.split(","):
        m = _TOKEN.match(token.strip())
        if m is None:
            raise ValueError(f"malformed partition token {token!r} in {text!r}")
        part = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) else 1
        if exp < 1:
            raise ValueError(f"exponent must be >= 1 in {token!r}")
        parts.extend([part] * exp)
    return Partition(parts)


def conjugate(p: Partition) -> Partition:
    """Transpose of the diagram: parts'[i] = #{j : parts[j] >= i+1}."""
    if not p.parts:
        return p
    return Partition([sum(1 for q in p.parts if q >= i) for i in range(1, p.parts[0] + 1)])


def dominates(p: Partition, q: Partition) -> bool:
    """True iff p is at or above q in the dominance order (prefix sums)."""
    if p.n != q.n:
        raise ValueError(f"partitions of different sizes: {p} vs {q}")
    sp = sq = 0
    for m in range(max(len(p), len(q))):
        sp += p.parts[m] if m < len(p) else 0
        sq += q.parts[m] if m < len(q) else 0
        if sp < sq:
            return False
    return True


def lex_compare(p: Partition, q: Partition) -> int:
    """-1, 0 or 1 comparing parts lexicographically."""
    if p.n != q.n:
        raise ValueError(f"partitions of different sizes: {p} vs {q}")
    if p.parts < q.parts:
        return -1
    if p.parts > q.parts:
        return 1
    return 0


def corners(p: Partition) -> list[Box]:
    """Boxes whose removal leaves a valid diagram, top row first."""
    out = []
    for i, part in enumerate(p.parts):
        below = p.parts[i + 1] if i + 1 < len(p.parts) else 0
        if part > below:
            out.append(Box(col=part, row=i + 1))
    return out


def remove_box(p: Partition, box: Box) -> Partition:
    """Diagram with one corner removed."""
    i = box.row - 1
    if i >= len(p.parts) or p.parts[i] != box.col:
        raise ValueError(f"{box} is not a corner of {p}")
    parts = list(p.parts)
    parts[i] -= 1
    if parts[i] == 0:
        parts.pop(i)
    return Partition(parts)


class StandardTableau:
    """Removal path of a diagram; boxes[k-1] holds the box of label k."""

    __slots__ = ("shape", "boxes")

    def __init__(self, shape: Partition, boxes: Sequence[Box]):
        self.shape = shape
        self.boxes = tuple(boxes)
        if len(self.boxes) != shape.n:
            raise ValueError("removal path length must equal the box count")

    def box_of(self, label: int) -> Box:
        return self.boxes[label - 1]

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.boxes == other.boxes

    def __hash__(self):
        return hash(self.boxes)

    def rows(self) -> list[list[int]]:
        """Row-wise filling with labels 1..n, for display."""
        grid = [[0] * part for part in self.shape.parts]
        for label, box in enumerate(self.boxes, start=1):
            grid[box.row - 1][box.col - 1] = label
        return grid

    def __repr__(self):
        return "StandardTableau(%s)" % "/".join(
            ",".join(map(str, row)) for row in self.rows()
        )


def standard_tableaux(p: Partition) -> Iterator[StandardTableau]:
    """All standard tableaux of shape p, in the canonical basis order.

    Paths are generated by recursive corner removal for the top label,
    corners visited bottom row first; the resulting order is ascending
    lexicographic on the row-reading word, the classical ordering for
    Young's orthogonal form (the first tableau of [2,1] is 12/3).
    """
    for boxes in _paths(p.parts):
        yield StandardTableau(p, boxes)


def _paths(parts: tuple[int, ...]) -> Iterator[tuple[Box, ...]]:
    if sum(parts) == 1:
        yield (Box(1, 1),)
        return
    p = Partition(parts)
    for box in reversed(corners(p)):
        rest = remove_box(p, box)
        for prefix in _paths(rest.parts):
            yield prefix + (box,)


@lru_cache(maxsize=None)
def num_standard_tableaux(p: Partition) -> int:
    """Tableau count by the hook length formula (independent of enumeration)."""
    conj = conjugate(p)
    prod = 1
    for i, part in enumerate(p.parts):
        for j in range(part):
            prod *= (part - j) + (conj.parts[j] - (i + 1))
    return factorial(p.n) // prod


def content_sum(p: Partition) -> int:
    """Sum of col - row over all boxes.

    Equals sum_j [C(l_j - j + 1, 2) - C(j, 2)] over rows of length l_j, the
    quantity subtracted from wt(K_n) in the complete-graph scalar: row j
    contributes (1-j) + ... + (l_j - j) = C(l_j - j + 1, 2) - C(1 - j, 2)
    and C(1 - j, 2) = C(j, 2) for the halved falling factorial.
    """
    return sum(
        part * (part + 1) // 2 - row * part
        for row, part in enumerate(p.parts, start=1)
    )


def in_row_class(p: Partition, k: int) -> bool:
    """Membership in the family with first row >= n - k."""
    if not 0 <= k < p.n:
        raise ValueError(f"k must satisfy 0 <= k < n, got k={k}, n={p.n}")
    return p.parts[0] >= p.n - k


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, descending lexicographic ([n] first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(parts) for parts in gen(n, n)) if n else (Partition(()),)


TABLEAU_CAP = 10**7


@lru_cache(maxsize=None)
def content_matrix(p: Partition) -> np.ndarray:
    """f x n integer array; row t, column k-1 is the content of box k in
    tableau t (canonical order). Backs the star / nested-star spectra."""
    count = num_standard_tableaux(p)
    if count > TABLEAU_CAP:
        raise ValueError(f"shape {p} has {count} tableaux, above cap {TABLEAU_CAP}")
    mat = np.empty((count, p.n), dtype=np.int64)
    for t, tab in enumerate(standard_tableaux(p)):
        for k, box in enumerate(tab.boxes):
            mat[t, k] = box.content
    return mat


def as_fraction(x) -> Fraction:
    """Exact Fraction view of an int/Fraction/float weight."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(x)
