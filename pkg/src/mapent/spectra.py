"""Singular-value spectra, bipartite entropies and a partial-trace oracle.

Two independent routes lead to the spectrum of a reduced state:

* :func:`singular_values` -- SVD of the coefficient matrix (LAPACK via numpy);
  the squared singular values are the nonzero eigenvalues of the reduced state.
* :func:`reduced_density_matrix` + :func:`hermitian_eigenvalues` -- an explicit
  partial trace built from :func:`mapent.state.index_encode` followed by a
  cyclic complex Jacobi eigensolver written here.  Neither step touches the
  reshape in :mod:`mapent.coeff` or LAPACK, so agreement between the routes is
  a genuine check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._config import get_settings
from .coeff import CoefficientMatrix, as_bipartition, coefficient_matrix, svdvals
from .errors import (
    BudgetExceededError,
    ConvergenceFailureError,
    NotNormalizedSpectrumError,
)
from .state import Bipartition, PureState, index_encode

__all__ = [
    "SpectrumResult",
    "ReducedDensityMatrix",
    "singular_values",
    "spectrum",
    "reduced_density_matrix",
    "entropy_from_spectrum",
    "entropy_from_eigenvalues",
    "hermitian_eigenvalues",
    "bipartite_entropy",
]


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    singular_values: np.ndarray
    """Nonzero singular values, descending."""
    rank: int
    discarded_mass: float
    """Sum of squares of the singular values treated as zero."""

    @property
    def probabilities(self) -> np.ndarray:
        """Squared singular values, i.e. the nonzero eigenvalues of the reduced state."""
        return self.singular_values**2


@dataclass(frozen=True, eq=False)
class ReducedDensityMatrix:
    rows: Bipartition
    entries: np.ndarray = field(repr=False)


def singular_values(cm: CoefficientMatrix | np.ndarray, tol: float | None = None) -> SpectrumResult:
    """Nonzero singular values of a coefficient matrix.

    Values at or below ``tol * sigma_max`` are dropped (default ``rank_rtol``)
    and their squared sum is returned as ``discarded_mass``.
    """
    tol = get_settings().rank_rtol if tol is None else tol
    m = cm.entries if isinstance(cm, CoefficientMatrix) else np.asarray(cm)
    s = svdvals(m)
    if s.size == 0 or s[0] == 0:
        return SpectrumResult(np.zeros(0), 0, 0.0)
    keep = s > tol * s[0]
    kept = np.array(s[keep])
    kept.setflags(write=False)
    return SpectrumResult(kept, int(kept.size), float(np.sum(s[~keep] ** 2)))


def spectrum(state: PureState, part: Bipartition | Sequence[int], tol: float | None = None) -> SpectrumResult:
    """Shorthand for ``singular_values(coefficient_matrix(state, part))``."""
    return singular_values(coefficient_matrix(state, part), tol)


def _entropy_bits(p: np.ndarray) -> float:
    p = p[p >= get_settings().zero_log_floor]
    if p.size == 0:
        return 0.0
    return max(0.0, float(-np.sum(p * np.log2(p))))


def entropy_from_spectrum(sp: SpectrumResult) -> float:
    """Von Neumann entropy in bits, ``-sum lambda^2 log2 lambda^2``.

    Raises
    ------
    NotNormalizedSpectrumError
        If the squared singular values do not sum to 1 within ``spectrum_norm_tol``.
    """
    p = np.asarray(sp.singular_values, dtype=float) ** 2
    total = float(p.sum())
    if abs(total - 1.0) > get_settings().spectrum_norm_tol:
        raise NotNormalizedSpectrumError(f"squared singular values sum to {total!r}")
    return _entropy_bits(p)


def entropy_from_eigenvalues(evals: Sequence[float]) -> float:
    """Entropy in bits of a density matrix given its eigenvalues.

    Rounding noise down to ``-eig_negative_tol`` is clamped to zero; anything
    more negative means the matrix was not positive semidefinite.
    """
    ev = np.asarray(evals, dtype=float)
    neg = get_settings().eig_negative_tol
    if np.any(ev < -neg):
        raise NotNormalizedSpectrumError(f"eigenvalue {ev.min()!r} below -{neg}")
    ev = np.clip(ev, 0.0, None)
    if abs(ev.sum() - 1.0) > get_settings().spectrum_norm_tol:
        raise NotNormalizedSpectrumError(f"eigenvalues sum to {ev.sum()!r}")
    return _entropy_bits(ev)


def bipartite_entropy(state: PureState, part: Bipartition | Sequence[int], tol: float | None = None) -> float:
    """Entropy (bits) of the reduced state on the row parties of ``part``."""
    return entropy_from_spectrum(spectrum(state, part, tol))


def reduced_density_matrix(state: PureState, rows: Bipartition | Sequence[int]) -> ReducedDensityMatrix:
    """Partial trace of ``|psi><psi|`` over the complement of ``rows``.

    ``rho[r, r'] = sum_c a(r, c) * conj(a(r', c))`` with the flat index of every
    ``(r, c)`` pair computed digit by digit through :func:`index_encode`.
    Intended as an oracle, not for speed.
    """
    part = as_bipartition(rows, state.n)
    dims = state.dims
    row_ranges = [range(dims[q - 1]) for q in part.rows]
    col_ranges = [range(dims[q - 1]) for q in part.cols]
    nrows = math.prod(len(r) for r in row_ranges)
    if nrows > get_settings().max_reduced_dim:
        raise BudgetExceededError(
            f"reduced dimension {nrows} exceeds {get_settings().max_reduced_dim}"
        )
    ncols = state.total_dim // nrows
    idx = np.empty((nrows, ncols), dtype=np.int64)
    digits = [0] * state.n
    for ri, rdig in enumerate(itertools.product(*row_ranges)):
        for q, s in zip(part.rows, rdig):
            digits[q - 1] = s
        for ci, cdig in enumerate(itertools.product(*col_ranges)):
            for q, s in zip(part.cols, cdig):
                digits[q - 1] = s
            idx[ri, ci] = index_encode(digits, dims)
    a = state.amplitudes[idx]
    rho = np.einsum("rc,sc->rs", a, a.conj())
    rho.setflags(write=False)
    return ReducedDensityMatrix(part, rho)


def hermitian_eigenvalues(
    rho: ReducedDensityMatrix | np.ndarray,
    tol: float = 1e-15,
    max_sweeps: int = 60,
) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.

    Each rotation first removes the phase of the pivot ``a_pq`` with a diagonal
    unitary, then applies the real symmetric Jacobi rotation.  Iteration stops
    once the off-diagonal Frobenius norm falls below ``tol`` times the full
    Frobenius norm.

    Returns
    -------
    numpy.ndarray
        Real eigenvalues sorted in descending order.
    """
    a = rho.entries if isinstance(rho, ReducedDensityMatrix) else rho
    a = np.array(a, dtype=np.complex128, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"square matrix required, got shape {a.shape}")
    n = a.shape[0]
    a = 0.5 * (a + a.conj().T)
    scale = np.linalg.norm(a)
    if n == 1 or scale == 0:
        return np.sort(a.diagonal().real)[::-1]
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(a.diagonal()))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= 1e-18 * scale:
                    continue
                phase = apq / mag
                theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                if abs(theta) > 1e150:
                    t = 0.5 / abs(theta)
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                j = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                cols = a[:, [p, q]] @ j
                a[:, p], a[:, q] = cols[:, 0], cols[:, 1]
                rows_ = j.conj().T @ a[[p, q], :]
                a[p, :], a[q, :] = rows_[0], rows_[1]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    else:
        raise ConvergenceFailureError(f"Jacobi did not converge in {max_sweeps} sweeps")
    return np.sort(a.diagonal().real)[::-1]
