"""Coefficient matrices of a pure state and their numerical rank."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from ._config import get_settings
from .errors import ConvergenceFailureError, InvalidBipartitionError
from .state import Bipartition, PureState

__all__ = [
    "CoefficientMatrix",
    "coefficient_matrix",
    "rank",
    "bipartitions",
    "as_bipartition",
]


@dataclass(frozen=True, eq=False)
class CoefficientMatrix:
    """Amplitudes arranged with row parties on the row index.

    ``entries[r, c]`` is the amplitude whose row-party digits read ``r`` and
    whose column-party digits read ``c``, both in lexicographic (party order,
    most significant first) order.
    """

    bipartition: Bipartition
    entries: np.ndarray = field(repr=False)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape


def as_bipartition(part: Bipartition | Sequence[int], n: int) -> Bipartition:
    if isinstance(part, Bipartition):
        if part.n != n:
            raise InvalidBipartitionError(f"bipartition is for {part.n} parties, state has {n}")
        return part
    return Bipartition(tuple(part), n)


def coefficient_matrix(state: PureState, part: Bipartition | Sequence[int]) -> CoefficientMatrix:
    """Reshape the amplitudes of ``state`` into the matrix ``C_rows``.

    Only a transpose and reshape of the amplitude tensor; no arithmetic is
    done on the values.
    """
    part = as_bipartition(part, state.n)
    axes = [q - 1 for q in part.rows] + [q - 1 for q in part.cols]
    nrows = math.prod(state.dims[q - 1] for q in part.rows)
    m = np.transpose(state.as_tensor(), axes).reshape(nrows, -1)
    m = np.ascontiguousarray(m)
    m.setflags(write=False)
    return CoefficientMatrix(part, m)


def svdvals(m: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.svd(m, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailureError(f"SVD did not converge: {exc}") from exc


def rank(cm: CoefficientMatrix | np.ndarray, tol: float | None = None) -> int:
    """Number of singular values above ``tol * sigma_max`` (relative threshold)."""
    tol = get_settings().rank_rtol if tol is None else tol
    m = cm.entries if isinstance(cm, CoefficientMatrix) else np.asarray(cm)
    s = svdvals(m)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def bipartitions(n: int, l: int | None = None) -> Iterator[Bipartition]:
    """All row subsets of size ``l`` (every size 1..n-1 if omitted), lexicographic."""
    sizes = range(1, n) if l is None else [l]
    for size in sizes:
        for rows in itertools.combinations(range(1, n + 1), size):
            yield Bipartition(rows, n)
