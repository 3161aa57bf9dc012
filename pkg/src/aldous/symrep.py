"""Orthogonal matrices for the irreducible representations of S_n.

Matrices are built in Young's orthogonal form over the canonical tableau
basis from `partitions`. That basis diagonalizes every nested star
operator simultaneously, so the swap operator of a star graph comes out
diagonal, and all images stay orthogonal, making the swap operator of any
graph a symmetric PSD matrix.

The module also carries the coloring-space representation (the action on
maps {1..n} -> colors with prescribed color counts) and the regular
representation, both used as decomposition oracles at small n.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .graphs import WeightedGraph
from .partitions import (
    Partition,
    StandardTableau,
    num_standard_tableaux,
    standard_tableaux,
)

DEFAULT_DIM_CAP = 5000


class DimensionCapExceeded(ValueError):
    """Representation dimension above the configured cap."""


class Permutation:
    """One-line notation, 1-based: images[i-1] is the image of i."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        if not (1 <= i <= n and 1 <= j <= n and i != j):
            raise ValueError(f"bad transposition ({i},{j}) in S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (g * h)(x) = g(h(x))
        return Permutation([self.images[x - 1] for x in other.images])

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(inv)

    def sign(self) -> int:
        return -1 if (self.n - len(_cycles(self))) % 2 else 1

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def _cycles(g: Permutation) -> list[list[int]]:
    seen = [False] * g.n
    cycles = []
    for start in range(1, g.n + 1):
        if seen[start - 1]:
            continue
        cycle = []
        x = start
        while not seen[x - 1]:
            seen[x - 1] = True
            cycle.append(x)
            x = g(x)
        cycles.append(cycle)
    return cycles


def cycle_type(g: Permutation) -> Partition:
    """Multiset of cycle lengths, sorted nonincreasing."""
    return Partition(sorted((len(c) for c in _cycles(g)), reverse=True))


def adjacent_word(g: Permutation) -> list[int]:
    """Indices i with g = s_{i_m} ... s_{i_1}, found by bubble sorting the
    one-line word (right multiplication by s_i swaps positions i, i+1)."""
    arr = list(g.images)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                word.append(i + 1)
                changed = True
    return word


@lru_cache(maxsize=None)
def tableau_basis(shape: Partition) -> tuple[tuple[StandardTableau, ...], dict]:
    """Canonical tableau list plus a lookup from removal path to index."""
    tabs = tuple(standard_tableaux(shape))
    return tabs, {t.boxes: i for i, t in enumerate(tabs)}


def check_dim(shape: Partition, cap: int = DEFAULT_DIM_CAP) -> int:
    dim = num_standard_tableaux(shape)
    if dim > cap:
        raise DimensionCapExceeded(f"dim {dim} of {shape} exceeds cap {cap}")
    return dim


@lru_cache(maxsize=None)
def rep_adjacent(shape: Partition, i: int) -> np.ndarray:
    """Image of the adjacent transposition (i, i+1) in Young's orthogonal form.

    For each tableau: labels i, i+1 in the same row fix the basis vector,
    in the same column negate it; otherwise the pair {T, T with i and i+1
    swapped} carries the block [[1/d, sqrt(1-1/d^2)], [., -1/d]] where
    d = content(box of i+1) - content(box of i) read in T.
    """
    n = shape.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"adjacent index must satisfy 1 <= i <= {n - 1}, got {i}")
    check_dim(shape)
    tabs, index = tableau_basis(shape)
    m = np.zeros((len(tabs), len(tabs)))
    for t_idx, tab in enumerate(tabs):
        lo, hi = tab.box_of(i), tab.box_of(i + 1)
        if lo.row == hi.row:
            m[t_idx, t_idx] = 1.0
        elif lo.col == hi.col:
            m[t_idx, t_idx] = -1.0
        else:
            d = hi.content - lo.content
            swapped = list(tab.boxes)
            swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
            s_idx = index[tuple(swapped)]
            m[t_idx, t_idx] = 1.0 / d
            m[t_idx, s_idx] = math.sqrt(1.0 - 1.0 / d**2)
    m.setflags(write=False)
    return m


def rep_permutation(shape: Partition, g: Permutation) -> np.ndarray:
    """Image of g as the product of adjacent images along a reduced word."""
    if g.n != shape.n:
        raise ValueError(f"permutation of {g.n} letters vs shape of {shape.n}")
    dim = check_dim(shape)
    m = np.eye(dim)
    for i in reversed(adjacent_word(g)):
        m = m @ rep_adjacent(shape, i)
    return m


@lru_cache(maxsize=None)
def rep_transposition(shape: Partition, i: int, j: int) -> np.ndarray:
    """Image of (i, j), i < j, via the palindromic adjacent chain."""
    if i >= j:
        raise ValueError("need i < j")
    if j == i + 1:
        return rep_adjacent(shape, i)
    s = rep_adjacent(shape, i)
    inner = rep_transposition(shape, i + 1, j)
    m = s @ inner @ s
    m.setflags(write=False)
    return m


def tensor_sign(m: np.ndarray, g: Permutation) -> np.ndarray:
    """Image of g in the sign-twisted representation: sign(g) times m."""
    return g.sign() * m


def delta_matrix(shape: Partition, graph: WeightedGraph,
                 dim_cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Matrix of the swap operator sum a_ij (id - (ij)) on the irreducible
    labeled by shape. Symmetric positive semidefinite."""
    if graph.n != shape.n:
        raise ValueError(f"graph on {graph.n} vertices vs shape of {shape.n}")
    dim = check_dim(shape, dim_cap)
    m = np.zeros((dim, dim))
    total = 0.0
    for i, j, w in graph.edges():
        m -= w * rep_transposition(shape, i, j)
        total += w
    m += total * np.eye(dim)
    return m


class ColoringSpace:
    """All maps q: {1..n} -> {1..m} with #q^-1(i) equal to the i-th part."""

    __slots__ = ("shape", "colorings", "index")

    def __init__(self, shape: Partition, max_size: int = 100_000):
        counts = shape.parts
        size = math.factorial(shape.n)
        for c in counts:
            size //= math.factorial(c)
        if size > max_size:
            raise ValueError(f"coloring space size {size} exceeds cap {max_size}")
        self.shape = shape
        self.colorings = tuple(_multiset_perms(counts))
        assert len(self.colorings) == size
        self.index = {q: i for i, q in enumerate(self.colorings)}

    def __len__(self):
        return len(self.colorings)


def _multiset_perms(counts: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    n = sum(counts)

    def rec(remaining: list[int], prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for color, c in enumerate(remaining, start=1):
            if c:
                remaining[color - 1] -= 1
                prefix.append(color)
                yield from rec(remaining, prefix)
                prefix.pop()
                remaining[color - 1] += 1

    yield from rec(list(counts), [])


def l2q_delta(shape: Partition, graph: WeightedGraph,
              max_size: int = 100_000) -> np.ndarray:
    """Swap operator on the coloring space of the shape.

    A transposition acts by exchanging the colors at its two positions, so
    the matrix is wt(A) I minus the weighted sum of those permutation
    matrices. The irreducible of the same shape embeds here.
    """
    if graph.n != shape.n:
        raise ValueError(f"graph on {graph.n} vertices vs shape of {shape.n}")
    space = ColoringSpace(shape, max_size=max_size)
    size = len(space)
    m = np.zeros((size, size))
    for i, j, w in graph.edges():
        for q_idx, q in enumerate(space.colorings):
            if q[i - 1] == q[j - 1]:
                continue  # the swap fixes this coloring: zero contribution
            swapped = list(q)
            swapped[i - 1], swapped[j - 1] = swapped[j - 1], swapped[i - 1]
            m[q_idx, q_idx] += w
            m[q_idx, space.index[tuple(swapped)]] -= w
    return m


REGULAR_HARD_CAP = 6


def all_permutations(n: int) -> list[Permutation]:
    import itertools

    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def regular_delta(graph: WeightedGraph) -> np.ndarray:
    """Swap operator acting by left multiplication on the group algebra.

    n! x n! and meant as an oracle: its spectrum is the union over
    irreducibles of dim-many copies of each per-irreducible spectrum.
    """
    n = graph.n
    if n > REGULAR_HARD_CAP:
        raise ValueError(f"regular representation capped at n={REGULAR_HARD_CAP}")
    perms = all_permutations(n)
    index = {g.images: k for k, g in enumerate(perms)}
    size = len(perms)
    m = graph.wt * np.eye(size)
    for i, j, w in graph.edges():
        t = Permutation.transposition(n, i, j)
        for k, g in enumerate(perms):
            m[index[(t * g).images], k] -= w
    return m
