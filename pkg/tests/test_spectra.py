import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mapent import override
from mapent.coeff import bipartitions, coefficient_matrix
from mapent.errors import BudgetExceededError, NotNormalizedSpectrumError
from mapent.gallery import basis_state, dicke, ghz, random_state
from mapent.spectra import (
    SpectrumResult,
    bipartite_entropy,
    entropy_from_eigenvalues,
    entropy_from_spectrum,
    hermitian_eigenvalues,
    reduced_density_matrix,
    singular_values,
    spectrum,
)
from mapent.state import make_state

R = 1 / math.sqrt(2)
# binary entropy h(1/3), evaluated term by term
H13 = -(1 / 3) * math.log2(1 / 3) - (2 / 3) * math.log2(2 / 3)


def test_h13_value():
    assert H13 == pytest.approx(0.9182958, abs=1e-7)


def test_singular_values_examples():
    np.testing.assert_allclose(spectrum(ghz(3, 2), [1]).singular_values, [R, R], atol=1e-15)
    sp = spectrum(basis_state((2, 2, 2), 3), [2])
    np.testing.assert_allclose(sp.singular_values, [1.0])
    assert sp.rank == 1
    w = spectrum(dicke(3, 1), [1])
    np.testing.assert_allclose(w.singular_values, [math.sqrt(2 / 3), math.sqrt(1 / 3)], atol=1e-15)
    assert w.discarded_mass == 0.0


def test_singular_values_drop_below_relative_tol():
    sp = singular_values(np.diag([1.0, 1e-12]))
    assert sp.rank == 1
    assert sp.discarded_mass == pytest.approx(1e-24)
    assert singular_values(np.diag([1.0, 1e-12]), tol=1e-14).rank == 2


def test_reduced_density_matrix_examples():
    bell = make_state((2, 2), [R, 0, 0, R])
    np.testing.assert_allclose(reduced_density_matrix(bell, [1]).entries, np.eye(2) / 2, atol=1e-15)
    np.testing.assert_allclose(
        reduced_density_matrix(basis_state((2, 2), 0), [1]).entries, [[1, 0], [0, 0]]
    )
    # W state: party 1 is |1> in one of three terms
    np.testing.assert_allclose(
        reduced_density_matrix(dicke(3, 1), [1]).entries, np.diag([2 / 3, 1 / 3]), atol=1e-15
    )


def test_reduced_density_matrix_budget():
    with override(max_reduced_dim=4):
        with pytest.raises(BudgetExceededError):
            reduced_density_matrix(random_state((2, 2, 2, 2), 0), [1, 2, 3])


def test_entropy_examples():
    assert entropy_from_spectrum(SpectrumResult(np.array([1.0]), 1, 0.0)) == 0.0
    assert entropy_from_spectrum(SpectrumResult(np.array([R, R]), 2, 0.0)) == pytest.approx(1.0, abs=1e-15)
    sp = SpectrumResult(np.array([math.sqrt(2 / 3), math.sqrt(1 / 3)]), 2, 0.0)
    assert entropy_from_spectrum(sp) == pytest.approx(H13, abs=1e-14)


def test_entropy_rejects_unnormalized():
    with pytest.raises(NotNormalizedSpectrumError):
        entropy_from_spectrum(SpectrumResult(np.array([0.5, 0.5]), 2, 0.0))


def test_entropy_from_eigenvalues_clamps_noise():
    assert entropy_from_eigenvalues([1.0, -1e-13]) == 0.0
    with pytest.raises(NotNormalizedSpectrumError):
        entropy_from_eigenvalues([1.0 + 1e-9, -1e-9])


def test_hermitian_eigenvalues_examples():
    np.testing.assert_allclose(hermitian_eigenvalues(np.diag([0.5, 0.5])), [0.5, 0.5])
    np.testing.assert_allclose(hermitian_eigenvalues(np.diag([1 / 3, 2 / 3])), [2 / 3, 1 / 3])
    s = random_state((2, 2, 2), 21)
    ev = hermitian_eigenvalues(reduced_density_matrix(s, [1, 2]))
    sv2 = np.linalg.svd(coefficient_matrix(s, [1, 2]).entries, compute_uv=False) ** 2
    np.testing.assert_allclose(ev, np.concatenate([sv2, np.zeros(4 - sv2.size)]), atol=1e-10)


def test_jacobi_on_known_complex_matrix():
    # Pauli-Y has eigenvalues +1, -1
    np.testing.assert_allclose(hermitian_eigenvalues(np.array([[0, -1j], [1j, 0]])), [1, -1], atol=1e-15)
    rng = np.random.default_rng(3)
    q, _ = np.linalg.qr(rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6)))
    lam = np.array([3.0, 2.0, 2.0, 0.5, -1.0, -4.0])
    h = q @ np.diag(lam) @ q.conj().T
    np.testing.assert_allclose(hermitian_eigenvalues(h), lam, atol=1e-12)


def _padded_sv2(state, b):
    cm = coefficient_matrix(state, b).entries
    sv2 = np.linalg.svd(cm, compute_uv=False) ** 2
    return np.concatenate([sv2, np.zeros(cm.shape[0] - sv2.size)])


@settings(max_examples=30, deadline=None)
@given(dims=st.lists(st.integers(2, 4), min_size=2, max_size=4), seed=st.integers(0, 2**31))
def test_oracle_equivalence_property(dims, seed):
    if math.prod(dims) > 256:
        dims = dims[:3]
    s = random_state(dims, seed)
    for b in bipartitions(len(dims)):
        ev = hermitian_eigenvalues(reduced_density_matrix(s, b))
        np.testing.assert_allclose(ev, _padded_sv2(s, b), atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(dims=st.lists(st.integers(2, 3), min_size=2, max_size=5), seed=st.integers(0, 2**31))
def test_entropy_symmetry_and_bounds(dims, seed):
    s = random_state(dims, seed)
    for b in bipartitions(len(dims)):
        e = bipartite_entropy(s, b)
        assert abs(e - bipartite_entropy(s, b.complement())) < 1e-10
        rdim = math.prod(dims[q - 1] for q in b.rows)
        cdim = s.total_dim // rdim
        assert -1e-12 <= e <= math.log2(min(rdim, cdim)) + 1e-12


@settings(max_examples=30, deadline=None)
@given(dims=st.lists(st.integers(2, 3), min_size=2, max_size=5), seed=st.integers(0, 2**31))
def test_spectrum_is_normalized_and_sorted(dims, seed):
    s = random_state(dims, seed)
    for b in bipartitions(len(dims)):
        sv = spectrum(s, b).singular_values
        assert abs(np.sum(sv**2) - 1) < 1e-9
        assert np.all(sv > 0) and np.all(np.diff(sv) <= 0)


def test_oracle_entropy_matches_svd_entropy():
    s = random_state((3, 2, 3), 8)
    for b in bipartitions(3):
        ev = hermitian_eigenvalues(reduced_density_matrix(s, b))
        assert entropy_from_eigenvalues(ev) == pytest.approx(bipartite_entropy(s, b), abs=1e-10)
