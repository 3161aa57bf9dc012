from fractions import Fraction

import numpy as np
import pytest

from aldous.graphs import (
    WeightedGraph,
    complete_graph,
    quasi_complete_graph,
    random_graph,
    star_graph,
)
from aldous.partitions import Partition, partitions_of
from aldous.spectral import (
    ExactSpectrum,
    Spectrum,
    complete_graph_eigenvalue,
    hook_spectrum,
    laplacian_gap,
    multiset_distance,
    quasi_complete_spectrum,
    remark_weights,
    spectrum,
    star_spectrum,
)
from aldous.symrep import delta_matrix


def test_spectrum_small_examples():
    assert spectrum(np.diag([3.0, 1.0, 2.0])).values == (1.0, 2.0, 3.0)
    vals = spectrum(np.array([[1.0, 1.0], [1.0, 1.0]])).values
    assert multiset_distance(vals, [0.0, 2.0]) < 1e-12
    vals = spectrum(delta_matrix(Partition([2, 1, 1]), star_graph(4, 4))).values
    assert multiset_distance(vals, [2, 5, 5]) < 1e-10


def test_spectrum_rejects_non_symmetric():
    with pytest.raises(ValueError):
        spectrum(np.array([[0.0, 1.0], [0.5, 0.0]]))
    with pytest.raises(ValueError):
        spectrum(np.ones((2, 3)))


def test_spectrum_accuracy_against_random_matrices():
    rng = np.random.default_rng(2)
    for n in (2, 5, 17, 40):
        m = rng.normal(size=(n, n))
        m = m + m.T
        ours = np.array(spectrum(m).values)
        ref = np.linalg.eigvalsh(m)
        assert np.abs(ours - ref).max() < 1e-10 * np.linalg.norm(m)


def test_spectrum_residual_certificate():
    rng = np.random.default_rng(4)
    for n in (3, 8, 20):
        m = rng.normal(size=(n, n))
        m = m + m.T
        spec, vectors = spectrum(m, want_vectors=True)
        norm = np.linalg.norm(m)
        for i, lam in enumerate(spec.values):
            res = np.linalg.norm(m @ vectors[:, i] - lam * vectors[:, i])
            assert res <= 10 * 1e-12 * norm


def test_spectrum_zero_matrix():
    assert spectrum(np.zeros((3, 3))).values == (0.0, 0.0, 0.0)


def test_star_spectrum_examples():
    spec = star_spectrum(Partition([2, 1, 1]), 4)
    assert spec.values == (2, 5, 5)
    for n in range(4, 9):
        assert star_spectrum(Partition([2, 2] + [1] * (n - 4), ), n).lambda1 == n - 1
        assert star_spectrum(Partition([2] + [1] * (n - 2)), n).lambda1 == n - 2
    for n in range(2, 7):
        for k in range(2, n + 1):
            assert star_spectrum(Partition([n]), k).values == (0,)
    with pytest.raises(ValueError):
        star_spectrum(Partition([3, 1]), 5)


def test_star_spectrum_matches_eigensolver():
    for n in range(4, 7):
        for shape in partitions_of(n):
            for k in range(2, n + 1):
                exact = star_spectrum(shape, k).as_spectrum()
                numeric = spectrum(delta_matrix(shape, star_graph(n, k)))
                assert multiset_distance(exact.values, numeric.values) < 1e-8


def test_quasi_complete_unit_weights_complete_graph():
    for n in range(3, 8):
        spec = quasi_complete_spectrum(Partition([n - 1, 1]), [1] * (n - 1),
                                       exact=True)
        assert all(v == n for v in spec.values)


def test_quasi_complete_indicator_reduces_to_star():
    for n in range(3, 7):
        for shape in partitions_of(n):
            for m in range(2, n + 1):
                a = [0] * (n - 1)
                a[m - 2] = 1
                assert (
                    quasi_complete_spectrum(shape, a, exact=True).values
                    == star_spectrum(shape, m).values
                )


def test_quasi_complete_matches_eigensolver():
    rng = np.random.default_rng(6)
    for n in range(3, 7):
        for _ in range(5):
            a = rng.random(n - 1)
            graph = quasi_complete_graph(n, a)
            for shape in partitions_of(n):
                formula = quasi_complete_spectrum(shape, list(a))
                numeric = spectrum(delta_matrix(shape, graph))
                assert multiset_distance(formula.values, numeric.values) < 1e-8


def test_remark_weights_rank_by_lex():
    from aldous.partitions import lex_compare

    for n in range(2, 6):
        weights = remark_weights(n)
        assert weights[0] == Fraction(1, n**4)
        lam1 = {
            p: quasi_complete_spectrum(p, weights, exact=True).lambda1
            for p in partitions_of(n)
        }
        for alpha in partitions_of(n):
            for beta in partitions_of(n):
                if lex_compare(alpha, beta) < 0:
                    assert lam1[alpha] > lam1[beta]


def test_complete_graph_eigenvalue():
    for n in range(2, 9):
        assert complete_graph_eigenvalue(Partition([n - 1, 1])) == n
        assert complete_graph_eigenvalue(Partition([1] * n)) == n * (n - 1)
        assert complete_graph_eigenvalue(Partition([n])) == 0
    # scalar action confirmed by the eigensolver on the complete graph
    for shape in partitions_of(5):
        vals = spectrum(delta_matrix(shape, complete_graph(5))).values
        scalar = complete_graph_eigenvalue(shape)
        assert all(abs(v - scalar) < 1e-9 for v in vals)


def test_hook_spectrum_examples():
    assert hook_spectrum(random_graph(5, 8), 0).values == (0.0,)
    spec = hook_spectrum(complete_graph(3), 2)
    assert multiset_distance(spec.values, [6.0]) < 1e-10
    g = random_graph(5, 9)
    expected = spectrum(delta_matrix(Partition([3, 1, 1]), g))
    assert multiset_distance(hook_spectrum(g, 2).values, expected.values) < 1e-7
    with pytest.raises(ValueError):
        hook_spectrum(g, 5)


def test_laplacian_gap():
    for n in range(3, 8):
        assert abs(laplacian_gap(complete_graph(n)) - n) < 1e-9
    single = WeightedGraph.from_edges(4, [(1, 2, 1.0)])
    assert abs(laplacian_gap(single)) < 1e-12
    for seed in range(5):
        g = random_graph(6, 200 + seed)
        lam1 = spectrum(delta_matrix(Partition([5, 1]), g)).lambda1
        assert abs(laplacian_gap(g) - lam1) < 1e-9


def test_duality_and_trivial_bound():
    from aldous.partitions import conjugate

    for n in range(2, 7):
        g = random_graph(n, 300 + n)
        spectra = {
            shape: spectrum(delta_matrix(shape, g)) for shape in partitions_of(n)
        }
        for shape in partitions_of(n):
            lam_max = spectra[shape].lambda_max
            assert lam_max <= 2 * g.wt + 1e-9
            assert abs(lam_max - (2 * g.wt - spectra[conjugate(shape)].lambda1)) < 1e-8


def test_zero_graph_spectra():
    zero = WeightedGraph(np.zeros((5, 5)))
    for shape in partitions_of(5):
        spec = spectrum(delta_matrix(shape, zero))
        assert spec.lambda1 == 0.0 and spec.lambda_max == 0.0
    assert quasi_complete_spectrum(Partition([3, 2]), [0] * 4, exact=True).values == (
        Fraction(0),
    ) * 5


def test_spectrum_types():
    s = Spectrum([3.0, 1.0, 2.0])
    assert s.lambda1 == 1.0 and s.lambda_max == 3.0 and len(s) == 3
    e = ExactSpectrum([Fraction(1, 3), Fraction(1, 4)])
    assert e.lambda1 == Fraction(1, 4)
    assert e.as_spectrum().values == (0.25, 1 / 3)
