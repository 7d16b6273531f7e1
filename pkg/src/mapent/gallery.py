"""Named state families: Dicke, GHZ, qutrit Dicke (D3), product, random, Schmidt.

Random states use numpy's ``default_rng`` (PCG64) seeded with the given integer;
real and imaginary parts are independent standard normals, then the vector is
normalized.  The same ``(dims, seed)`` always yields bitwise-equal amplitudes.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from ._config import get_settings
from .errors import InvalidExcitationCountError, NotNormalizedError
from .state import (
    DimsProfile,
    PureState,
    _wrap,
    all_digits,
    as_profile,
    check_budget,
    index_decode,
    index_encode,
    make_state,
    tensor_product,
)

__all__ = [
    "basis_state",
    "dicke",
    "ghz",
    "d3",
    "symmetric_state",
    "product_state",
    "random_state",
    "random_single",
    "schmidt_state",
]


def basis_state(dims: DimsProfile | Sequence[int] | int, digits: Sequence[int] | int = 0) -> PureState:
    """Computational basis state.

    ``dims`` may be a single int for one party.  ``digits`` is either a digit
    string or a flat index.
    """
    profile = as_profile((dims,) if isinstance(dims, int) else dims)
    i = digits if isinstance(digits, (int, np.integer)) else index_encode(tuple(digits), profile)
    index_decode(int(i), profile)  # range check
    a = np.zeros(profile.total_dim, dtype=np.complex128)
    a[int(i)] = 1.0
    return _wrap(profile, a)


def symmetric_state(d: int, counts: Sequence[int]) -> PureState:
    """Equal superposition of all strings with ``counts[v]`` occurrences of letter ``v``.

    Built by scanning every basis string of ``(d,) * n`` and keeping those with
    the requested letter multiset, so no permutation de-duplication is needed.
    """
    counts = [int(c) for c in counts]
    if len(counts) != d or any(c < 0 for c in counts):
        raise InvalidExcitationCountError(f"need {d} non-negative letter counts, got {counts}")
    n = sum(counts)
    if n < 1:
        raise InvalidExcitationCountError("at least one party required")
    profile = DimsProfile((d,) * n)
    check_budget(profile.total_dim)
    digits = all_digits(profile)
    mask = np.ones(profile.total_dim, dtype=bool)
    for v, c in enumerate(counts):
        mask &= np.count_nonzero(digits == v, axis=1) == c
    mult = math.factorial(n)
    for c in counts:
        mult //= math.factorial(c)
    a = np.zeros(profile.total_dim, dtype=np.complex128)
    a[mask] = mult ** -0.5
    return _wrap(profile, a)


def dicke(n: int, l1: int) -> PureState:
    """n-qubit Dicke state with ``l1`` excitations."""
    if n < 1 or not 0 <= l1 <= n:
        raise InvalidExcitationCountError(f"need 0 <= l1 <= n and n >= 1, got n={n}, l1={l1}")
    return symmetric_state(2, (n - l1, l1))


def d3(n: int, l1: int, l2: int) -> PureState:
    """n-qutrit symmetric state with ``l1`` ones, ``l2`` twos and ``n-l1-l2`` zeros."""
    if n < 1 or l1 < 0 or l2 < 0 or l1 + l2 > n:
        raise InvalidExcitationCountError(
            f"need l1, l2 >= 0 and l1 + l2 <= n, got n={n}, l1={l1}, l2={l2}"
        )
    return symmetric_state(3, (n - l1 - l2, l1, l2))


def ghz(n: int, d: int = 2) -> PureState:
    """n-party, d-level GHZ state ``sum_i |i...i> / sqrt(d)``."""
    if n < 2 or d < 2:
        raise ValueError(f"GHZ needs n >= 2 and d >= 2, got n={n}, d={d}")
    profile = DimsProfile((d,) * n)
    check_budget(profile.total_dim)
    a = np.zeros(profile.total_dim, dtype=np.complex128)
    # |i...i> has flat index i * (1 + d + ... + d^(n-1))
    step = (d**n - 1) // (d - 1)
    a[np.arange(d) * step] = d**-0.5
    return _wrap(profile, a)


def product_state(factors: Sequence[PureState]) -> PureState:
    """Tensor product of single-party states, in order."""
    if not factors:
        raise ValueError("product_state needs at least one factor")
    for f in factors:
        if f.n != 1:
            raise ValueError(f"factors must be single-party, got dims {f.dims}")
    total = math.prod(f.total_dim for f in factors)
    check_budget(total)
    out = factors[0]
    for f in factors[1:]:
        out = tensor_product(out, f)
    return out


def random_state(dims: DimsProfile | Sequence[int], seed: int | None = None) -> PureState:
    """Seeded random pure state with i.i.d. complex Gaussian amplitudes."""
    profile = as_profile(dims)
    check_budget(profile.total_dim)
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(profile.total_dim) + 1j * rng.standard_normal(profile.total_dim)
    return _wrap(profile, z / np.linalg.norm(z))


def random_single(d: int, seed: int | None = None) -> PureState:
    return random_state((d,), seed)


def schmidt_state(n: int, c0: complex, c1: complex) -> PureState:
    """``c0 |0...0> + c1 |1...1>`` on n qubits."""
    if n < 2:
        raise ValueError("schmidt_state needs n >= 2")
    norm2 = abs(c0) ** 2 + abs(c1) ** 2
    if abs(norm2 - 1.0) > get_settings().norm_tol:
        raise NotNormalizedError(f"|c0|^2 + |c1|^2 = {norm2!r}")
    profile = DimsProfile((2,) * n)
    check_budget(profile.total_dim)
    a = np.zeros(profile.total_dim, dtype=np.complex128)
    a[0], a[-1] = c0, c1
    return make_state(profile, a)
