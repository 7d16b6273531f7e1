"""Pure states of n parties with arbitrary local dimensions.

Index convention
----------------
A state on local dimensions ``(d_1, ..., d_n)`` stores its amplitudes as one flat
complex vector.  The flat index of the basis string ``s_1 s_2 ... s_n`` is the
mixed-radix number with party 1 as the MOST significant digit::

    i = ((s_1 * d_2 + s_2) * d_3 + s_3) ... * d_n + s_n

This is numpy's C order, so ``amplitudes.reshape(dims)[s_1, ..., s_n]`` is the
amplitude of ``|s_1 ... s_n>``.  Parties are numbered from 1 in the public API.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from ._config import get_settings
from .errors import (
    BudgetExceededError,
    DigitOutOfRangeError,
    IndexOutOfRangeError,
    InvalidBipartitionError,
    InvalidDimsError,
    InvalidPermutationError,
    LengthMismatchError,
    NotNormalizedError,
    StateParseError,
    ZeroVectorError,
)

__all__ = [
    "DimsProfile",
    "PureState",
    "Bipartition",
    "as_profile",
    "check_budget",
    "make_state",
    "index_encode",
    "index_decode",
    "all_digits",
    "tensor_product",
    "permute_parties",
    "parse_state_text",
    "format_state_text",
    "read_state",
    "write_state",
]


@dataclass(frozen=True)
class DimsProfile:
    """Ordered local dimensions, one per party."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if len(dims) < 1:
            raise InvalidDimsError("a state needs at least one party")
        if any(d < 2 for d in dims):
            raise InvalidDimsError(f"local dimensions must be >= 2, got {dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def total_dim(self) -> int:
        return math.prod(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __len__(self):
        return len(self.dims)

    def __getitem__(self, k):
        return self.dims[k]


def as_profile(dims: DimsProfile | Sequence[int]) -> DimsProfile:
    return dims if isinstance(dims, DimsProfile) else DimsProfile(tuple(dims))


def check_budget(total_dim: int) -> None:
    limit = get_settings().max_total_dim
    if total_dim > limit:
        raise BudgetExceededError(
            f"state would need {total_dim} amplitudes, budget is {limit}"
        )


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized amplitude vector over a :class:`DimsProfile`.

    Build instances with :func:`make_state` or one of the gallery constructors;
    the amplitude array is stored read-only.
    """

    profile: DimsProfile
    amplitudes: np.ndarray = field(repr=False)

    @property
    def dims(self) -> tuple[int, ...]:
        return self.profile.dims

    @property
    def n(self) -> int:
        return self.profile.n

    @property
    def total_dim(self) -> int:
        return self.profile.total_dim

    def as_tensor(self) -> np.ndarray:
        """View of the amplitudes with one axis per party."""
        return self.amplitudes.reshape(self.dims)

    def __repr__(self):
        return f"PureState(dims={self.dims})"


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.complex128, copy=True)
    a.setflags(write=False)
    return a


def make_state(
    dims: DimsProfile | Sequence[int],
    amplitudes: Iterable[complex],
    normalize: bool = False,
) -> PureState:
    """Build a pure state from a flat amplitude list.

    Parameters
    ----------
    dims : DimsProfile or sequence of int
        Local dimensions, party 1 first.
    amplitudes : iterable of complex
        Amplitudes in flat-index order (party 1 most significant).
    normalize : bool, default False
        Rescale to unit norm. When False the norm must already be 1 to within
        ``norm_tol``.

    Raises
    ------
    LengthMismatchError, ZeroVectorError, NotNormalizedError, BudgetExceededError
    """
    profile = as_profile(dims)
    check_budget(profile.total_dim)
    a = np.asarray(list(amplitudes) if not isinstance(amplitudes, np.ndarray) else amplitudes,
                   dtype=np.complex128).ravel()
    if a.size != profile.total_dim:
        raise LengthMismatchError(
            f"{a.size} amplitudes given, dims {profile.dims} need {profile.total_dim}"
        )
    cfg = get_settings()
    if not np.any(np.abs(a) >= cfg.zero_vector_floor):
        raise ZeroVectorError("all amplitudes are zero")
    norm = np.linalg.norm(a)
    if normalize:
        a = a / norm
    elif abs(norm - 1.0) > cfg.norm_tol:
        raise NotNormalizedError(f"norm is {norm!r}, expected 1 within {cfg.norm_tol}")
    return PureState(profile, _frozen(a))


def _wrap(profile: DimsProfile, a: np.ndarray) -> PureState:
    # internal fast path for amplitudes known to be normalized
    return PureState(profile, _frozen(a))


def index_encode(digits: Sequence[int], dims: DimsProfile | Sequence[int]) -> int:
    """Flat index of the basis string ``digits`` (party 1 most significant)."""
    profile = as_profile(dims)
    if len(digits) != profile.n:
        raise DigitOutOfRangeError(f"expected {profile.n} digits, got {len(digits)}")
    i = 0
    for s, d in zip(digits, profile.dims):
        if not 0 <= s < d:
            raise DigitOutOfRangeError(f"digit {s} outside [0, {d})")
        i = i * d + int(s)
    return i


def index_decode(i: int, dims: DimsProfile | Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`index_encode`."""
    profile = as_profile(dims)
    if not 0 <= i < profile.total_dim:
        raise IndexOutOfRangeError(f"index {i} outside [0, {profile.total_dim})")
    out = []
    for d in reversed(profile.dims):
        i, s = divmod(i, d)
        out.append(s)
    return tuple(reversed(out))


def all_digits(dims: DimsProfile | Sequence[int]) -> np.ndarray:
    """Array of shape ``(total_dim, n)``; row ``i`` is ``index_decode(i)``."""
    profile = as_profile(dims)
    idx = np.unravel_index(np.arange(profile.total_dim), profile.dims)
    return np.stack(idx, axis=1)


def tensor_product(s1: PureState, s2: PureState) -> PureState:
    """``s1 (x) s2`` on the concatenated dims profile."""
    profile = DimsProfile(s1.dims + s2.dims)
    check_budget(profile.total_dim)
    a = np.outer(s1.amplitudes, s2.amplitudes).ravel()
    return _wrap(profile, a / np.linalg.norm(a))


def _check_perm(perm: Sequence[int], n: int) -> tuple[int, ...]:
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidPermutationError(f"{perm} is not a permutation of 1..{n}")
    return perm


def permute_parties(state: PureState, perm: Sequence[int]) -> PureState:
    """Reorder parties so that output party ``j`` is input party ``perm[j]``.

    ``perm`` is 1-based.  The output amplitude at digits
    ``(s_perm(1), ..., s_perm(n))`` equals the input amplitude at
    ``(s_1, ..., s_n)``; dims are permuted the same way.
    """
    perm = _check_perm(perm, state.n)
    axes = [p - 1 for p in perm]
    t = np.transpose(state.as_tensor(), axes)
    profile = DimsProfile(tuple(state.dims[a] for a in axes))
    return _wrap(profile, np.ascontiguousarray(t).ravel())


@dataclass(frozen=True)
class Bipartition:
    """Split of parties ``1..n`` into sorted ``rows`` and the complement ``cols``."""

    rows: tuple[int, ...]
    n: int

    def __post_init__(self):
        rows = tuple(sorted(int(r) for r in self.rows))
        n = int(self.n)
        if len(set(rows)) != len(rows):
            raise InvalidBipartitionError(f"repeated party in {rows}")
        if any(not 1 <= r <= n for r in rows):
            raise InvalidBipartitionError(f"parties {rows} outside 1..{n}")
        if not 1 <= len(rows) <= n - 1:
            raise InvalidBipartitionError(
                f"row subset must have between 1 and {n - 1} parties, got {len(rows)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)

    @property
    def l(self) -> int:
        return len(self.rows)

    @property
    def cols(self) -> tuple[int, ...]:
        rows = set(self.rows)
        return tuple(k for k in range(1, self.n + 1) if k not in rows)

    def complement(self) -> Bipartition:
        return Bipartition(self.cols, self.n)

    def __str__(self):
        return "{" + ",".join(map(str, self.rows)) + "}"


# --- text file format -------------------------------------------------------
#
#   # comment
#   dims: 2 2
#   0.7071067811865476 0
#   0 0
#   0 0
#   0.7071067811865476 0

_DIMS_RE = re.compile(r"^dims:\s*(.*)$")


def parse_state_text(text: str, normalize: bool = False) -> PureState:
    """Parse the ``dims:`` + ``re im`` line format into a state."""
    dims = None
    amps: list[complex] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if dims is None:
            m = _DIMS_RE.match(line)
            if not m:
                raise StateParseError(f"line {lineno}: expected 'dims: d1 ... dn'")
            try:
                dims = DimsProfile(tuple(int(x) for x in m.group(1).split()))
            except (ValueError, InvalidDimsError) as exc:
                raise StateParseError(f"line {lineno}: bad dims: {exc}") from exc
            continue
        parts = line.split()
        if len(parts) != 2:
            raise StateParseError(f"line {lineno}: expected 're im', got {line!r}")
        try:
            amps.append(complex(float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise StateParseError(f"line {lineno}: {exc}") from exc
    if dims is None:
        raise StateParseError("missing 'dims:' header")
    if len(amps) != dims.total_dim:
        raise StateParseError(
            f"dims {dims.dims} need {dims.total_dim} amplitudes, found {len(amps)}"
        )
    try:
        return make_state(dims, amps, normalize=normalize)
    except (ZeroVectorError, NotNormalizedError) as exc:
        raise StateParseError(str(exc)) from exc


def format_state_text(state: PureState) -> str:
    lines = ["dims: " + " ".join(map(str, state.dims))]
    lines += [f"{a.real!r} {a.imag!r}" for a in state.amplitudes.tolist()]
    return "\n".join(lines) + "\n"


def read_state(path: str | Path, normalize: bool = False) -> PureState:
    return parse_state_text(Path(path).read_text(), normalize=normalize)


def write_state(state: PureState, path: str | Path) -> None:
    Path(path).write_text(format_state_text(state))
