"""Eigenvalues: a dense symmetric solver plus the closed-form spectra.

The closed forms all come from the simultaneous diagonalization of the
nested star operators on the canonical tableau basis:

  * a star joining vertex k to 1..k-1 acts with eigenvalue
    (k-1) + row - col of the box holding label k, one eigenvalue per
    standard tableau;
  * a nonnegative combination of nested stars (weight a_k on the star at
    k) acts with eigenvalue wt - sum_k a_k (col - row of box k), again per
    tableau, evaluated exactly in rational arithmetic on request;
  * the complete graph acts by the scalar C(n,2) - content sum;
  * the spectrum on a hook [n-k, 1^k] consists of the k-subset sums of
    the spectrum on [n-1, 1].

The numeric solver is a cyclic Jacobi iteration: simple, accurate for the
symmetric PSD matrices that show up here, and replaceable by any solver
meeting the same residual contract.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .graphs import WeightedGraph
from .partitions import Partition, as_fraction, content_matrix, content_sum
from .symrep import delta_matrix

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Jacobi sweeps exhausted before the off-diagonal norm target."""


class Spectrum:
    """Sorted eigenvalues with smallest/largest accessors."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = tuple(sorted(values))

    @property
    def lambda1(self):
        return self.values[0]

    @property
    def lambda_max(self):
        return self.values[-1]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other):
        return isinstance(other, type(self)) and self.values == other.values

    def __repr__(self):
        return f"{type(self).__name__}({list(self.values)})"


class ExactSpectrum(Spectrum):
    """Spectrum holding exact rationals."""

    def __init__(self, values):
        super().__init__(Fraction(v) for v in values)

    def as_spectrum(self) -> Spectrum:
        return Spectrum(float(v) for v in self.values)


def spectrum(m: np.ndarray, tol: float = DEFAULT_TOL,
             want_vectors: bool = False):
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm falls below
    tol * ||m||_F. Returns a Spectrum, or (Spectrum, V) with eigenvector
    columns matching the sorted order when want_vectors is set.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    norm = float(np.linalg.norm(m))
    if not np.allclose(m, m.T, atol=max(tol * norm, 1e-300), rtol=0.0):
        raise ValueError("matrix must be symmetric")
    n = m.shape[0]
    a = (np.array(m) + np.array(m).T) / 2.0
    v = np.eye(n)
    if n == 1:
        values = Spectrum([float(a[0, 0])])
        return (values, v) if want_vectors else values

    def off_norm() -> float:
        # summed from the off-diagonal entries themselves: the subtraction
        # form sqrt(sum(a^2) - sum(diag^2)) cancels catastrophically and
        # cannot see below sqrt(eps) * ||m||
        off = a - np.diag(np.diag(a))
        return float(np.linalg.norm(off))

    target = tol * norm
    for _ in range(MAX_SWEEPS):
        off = off_norm()
        if off <= target:
            break
        # entries this small cannot dominate the sweep; the largest entry
        # always exceeds off/n, so at least one rotation fires per sweep
        skip = off / (2.0 * n)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) if theta != 0 else 1.0
                t = t / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vec_p = v[:, p].copy()
                v[:, p] = c * vec_p - s * v[:, q]
                v[:, q] = s * vec_p + c * v[:, q]
    else:
        raise ConvergenceError(
            f"off-diagonal norm {off_norm():.3e} above target {target:.3e} "
            f"after {MAX_SWEEPS} sweeps"
        )
    eigs = np.diag(a).copy()
    order = np.argsort(eigs, kind="stable")
    result = Spectrum(float(x) for x in eigs[order])
    if want_vectors:
        return result, v[:, order]
    return result


@lru_cache(maxsize=None)
def star_spectrum(shape: Partition, k: int) -> ExactSpectrum:
    """Spectrum of the star joining k to 1..k-1, one value per tableau:
    (k-1) + row - col of the box holding label k."""
    if not 2 <= k <= shape.n:
        raise ValueError(f"star index must satisfy 2 <= k <= {shape.n}, got {k}")
    contents = content_matrix(shape)[:, k - 1]
    return ExactSpectrum(int(k - 1 - c) for c in contents)


def quasi_complete_spectrum(shape: Partition, a, exact: bool = False) -> Spectrum:
    """Spectrum of the nested-star combination with weights a[2..n].

    Each tableau contributes wt - sum_k a_k * content(box of k) with
    wt = sum_k a_k (k-1). Exact mode runs in Fractions and is required for
    the fast-decaying weights used to separate lexicographic neighbors.
    """
    a = list(a)
    if len(a) != shape.n - 1:
        raise ValueError(f"need {shape.n - 1} weights, got {len(a)}")
    if any(x < 0 for x in a):
        raise ValueError("weights must be nonnegative")
    contents = content_matrix(shape)
    if exact:
        weights = [as_fraction(x) for x in a]
        wt = sum(w * k for k, w in enumerate(weights, start=1))
        values = [
            wt - sum(w * int(c) for w, c in zip(weights, row[1:]))
            for row in contents
        ]
        return ExactSpectrum(values)
    weights = np.asarray(a, dtype=float)
    wt = float(np.dot(weights, np.arange(1, shape.n)))
    values = wt - contents[:, 1:].astype(float) @ weights
    return Spectrum(float(x) for x in values)


def remark_weights(n: int) -> list[Fraction]:
    """The fast-decaying exact weights a_k = n^(-2k), k = 2..n."""
    return [Fraction(1, n ** (2 * k)) for k in range(2, n + 1)]


def complete_graph_eigenvalue(shape: Partition) -> int:
    """Scalar action of the unit complete graph: C(n,2) - content sum.

    For a partition of m this is also the scalar by which the clique on the
    first m vertices acts on that component of the restriction, so the shape
    alone determines the value.
    """
    n = shape.n
    return n * (n - 1) // 2 - content_sum(shape)


def standard_rep_spectrum(graph: WeightedGraph, tol: float = DEFAULT_TOL) -> Spectrum:
    """Numeric spectrum on [n-1, 1]."""
    n = graph.n
    shape = Partition([n - 1, 1]) if n > 1 else Partition([1])
    if n == 1:
        return Spectrum([0.0])
    return spectrum(delta_matrix(shape, graph), tol)


def hook_spectrum(graph: WeightedGraph, k: int, tol: float = DEFAULT_TOL) -> Spectrum:
    """Spectrum on the hook [n-k, 1^k]: k-subset sums of the [n-1,1] one."""
    n = graph.n
    if not 0 <= k <= n - 1:
        raise ValueError(f"hook leg must satisfy 0 <= k <= {n - 1}, got {k}")
    base = standard_rep_spectrum(graph, tol)
    return Spectrum(sum(combo) for combo in combinations(base.values, k))


def laplacian_gap(graph: WeightedGraph, tol: float = DEFAULT_TOL) -> float:
    """Second-smallest eigenvalue of diag(row sums) - weights."""
    lap = np.diag(graph.weights.sum(axis=1)) - graph.weights
    return spectrum(lap, tol).values[1]


def multiset_distance(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Max absolute difference after sorting; inf on length mismatch."""
    if len(xs) != len(ys):
        return float("inf")
    if not xs:
        return 0.0
    return float(np.max(np.abs(np.sort(np.asarray(xs, float)) - np.sort(np.asarray(ys, float)))))


def multiset_contains(sup: Sequence[float], sub: Sequence[float], tol: float) -> bool:
    """Greedy check that every value of sub matches a distinct value of sup."""
    pool = sorted(float(x) for x in sup)
    for x in sorted(float(y) for y in sub):
        i = int(np.searchsorted(pool, x))
        best = None
        for j in (i - 1, i):
            if 0 <= j < len(pool) and abs(pool[j] - x) <= tol:
                if best is None or abs(pool[j] - x) < abs(pool[best] - x):
                    best = j
        if best is None:
            return False
        pool.pop(best)
    return True
