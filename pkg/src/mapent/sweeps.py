"""Parameter sweeps over the Dicke and D3 families and the GHZ closed-form check."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .gallery import d3, dicke, ghz
from .measures import level_ranks, mape
from .state import PureState

__all__ = [
    "SweepRow",
    "GhzCheckRow",
    "sweep_row",
    "sweep_dicke",
    "sweep_d3",
    "check_ghz",
]


@dataclass(frozen=True)
class SweepRow:
    params: dict
    mems: tuple[float, ...]
    mape: float
    rank_half: int
    """Rank of C over the ``n // 2``-party subsets (maximum if they differ)."""
    rank_uniform: bool
    """False when different ``n // 2``-subsets gave different ranks."""


def sweep_row(state: PureState, params: dict, tol: float | None = None) -> SweepRow:
    m = mape(state, tol)
    ranks = level_ranks(state, state.n // 2, tol)
    return SweepRow(dict(params), m.mems.values, m.m, int(ranks.max()), bool(ranks.min() == ranks.max()))


def _run(jobs: list[tuple[dict, Callable[[], PureState]]], tol, workers) -> list[SweepRow]:
    def one(job):
        params, build = job
        return sweep_row(build(), params, tol)

    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(one, jobs))
    return [one(j) for j in jobs]


def sweep_dicke(ns: Iterable[int], tol: float | None = None, workers: int | None = None) -> list[SweepRow]:
    """Rows for ``dicke(n, l1)``, ``l1 = 0..n``, for each ``n`` in order."""
    jobs = [
        ({"n": n, "l1": l1}, (lambda n=n, l1=l1: dicke(n, l1)))
        for n in ns
        for l1 in range(n + 1)
    ]
    return _run(jobs, tol, workers)


def sweep_d3(
    n: int,
    l1: int | None = None,
    tol: float | None = None,
    workers: int | None = None,
) -> list[SweepRow]:
    """Rows over the simplex ``l1 + l2 <= n``, or the slice at fixed ``l1``."""
    l1s = range(n + 1) if l1 is None else [l1]
    jobs = [
        ({"n": n, "l1": a, "l2": b, "l0": n - a - b}, (lambda a=a, b=b: d3(n, a, b)))
        for a in l1s
        for b in range(n - a + 1)
    ]
    return _run(jobs, tol, workers)


@dataclass(frozen=True)
class GhzCheckRow:
    n: int
    d: int
    mape: float
    expected: float
    abs_err: float
    passed: bool


def check_ghz(ns: Sequence[int], ds: Sequence[int], atol: float = 1e-9) -> list[GhzCheckRow]:
    """Compare ``mape(ghz(n, d))`` against ``(n // 2) * log2(d)``."""
    rows = []
    for n in ns:
        for d in ds:
            m = mape(ghz(n, d)).m
            exp = (n // 2) * math.log2(d)
            err = abs(m - exp)
            rows.append(GhzCheckRow(n, d, m, exp, err, err < atol))
    return rows
