"""Averaged partial entropies, MAPE and the genuine-entanglement test.

For a pure state on n parties the level-``l`` averaged partial entropy is the
geometric mean of the bipartite entropies ``E_A`` over all ``C(n, l)`` row
subsets ``A`` of size ``l``::

    S_l = (prod_A E_A) ** (1 / C(n, l))

The MEMS vector is ``(S_1, ..., S_{n//2})`` and MAPE is its l1 norm.  At
``l = n/2`` both members of every complementary pair are included, matching the
``C(n, l)`` normalisation; ``E_A = E_{A^c}`` for pure states so this does not
bias the mean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._config import get_settings
from .coeff import bipartitions, coefficient_matrix, rank
from .errors import LevelOutOfRangeError, SinglePartyStateError
from .spectra import bipartite_entropy
from .state import Bipartition, PureState

__all__ = [
    "MemsVector",
    "MapeValue",
    "EntanglementVerdict",
    "subset_entropies",
    "geometric_mean",
    "ape",
    "mems",
    "mape",
    "l2_ape",
    "is_genuinely_entangled",
    "level_ranks",
]


@dataclass(frozen=True)
class MemsVector:
    values: tuple[float, ...]
    n: int

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def l1(self) -> float:
        return float(sum(self.values))

    def l2(self) -> float:
        return float(math.sqrt(sum(v * v for v in self.values)))


@dataclass(frozen=True)
class MapeValue:
    m: float
    mems: MemsVector

    def __float__(self):
        return self.m


class EntanglementVerdict(NamedTuple):
    genuine: bool
    witness: Bipartition | None
    """First bipartition found with a rank-1 coefficient matrix, if any."""

    def __bool__(self):
        return self.genuine


def _require_multipartite(state: PureState) -> None:
    if state.n < 2:
        raise SinglePartyStateError("entanglement measures need at least two parties")


def subset_entropies(state: PureState, l: int, tol: float | None = None) -> np.ndarray:
    """Entropies ``E_A`` for every size-``l`` subset, in lexicographic subset order."""
    return np.array([bipartite_entropy(state, b, tol) for b in bipartitions(state.n, l)])


def geometric_mean(values) -> float:
    """Geometric mean of non-negative entropies, evaluated in log space.

    Any value below ``entropy_zero`` makes the product zero.
    """
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        raise ValueError("geometric mean of no values")
    if np.min(v) < get_settings().entropy_zero:
        return 0.0
    return float(2.0 ** np.mean(np.log2(v)))


def ape(state: PureState, l: int, tol: float | None = None) -> float:
    """Averaged partial entropy ``S_l`` in bits, for ``1 <= l <= n // 2``."""
    _require_multipartite(state)
    if not 1 <= l <= state.n // 2:
        raise LevelOutOfRangeError(f"level {l} outside 1..{state.n // 2}")
    return geometric_mean(subset_entropies(state, l, tol))


def mems(state: PureState, tol: float | None = None) -> MemsVector:
    """The vector ``(S_1, ..., S_{n//2})``."""
    _require_multipartite(state)
    return MemsVector(tuple(ape(state, l, tol) for l in range(1, state.n // 2 + 1)), state.n)


def mape(state: PureState, tol: float | None = None) -> MapeValue:
    """MAPE, the sum of the MEMS entries (bits)."""
    vec = mems(state, tol)
    return MapeValue(vec.l1(), vec)


def l2_ape(state: PureState, tol: float | None = None) -> float:
    """Euclidean norm of the MEMS vector.

    Not an entanglement monotone in general; provided for the LOCC search in
    :mod:`mapent.locc`.
    """
    return mems(state, tol).l2()


def is_genuinely_entangled(state: PureState, tol: float | None = None) -> EntanglementVerdict:
    """True iff every coefficient matrix has rank greater than 1.

    All bipartitions are checked, sizes ``1..n-1`` in lexicographic order; the
    witness is the first one with rank 1.
    """
    _require_multipartite(state)
    for b in bipartitions(state.n):
        if rank(coefficient_matrix(state, b), tol) <= 1:
            return EntanglementVerdict(False, b)
    return EntanglementVerdict(True, None)


def level_ranks(state: PureState, l: int, tol: float | None = None) -> np.ndarray:
    """Ranks of ``C_A`` for all size-``l`` subsets ``A``, lexicographic order."""
    return np.array([rank(coefficient_matrix(state, b), tol) for b in bipartitions(state.n, l)])
