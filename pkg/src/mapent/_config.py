"""Numerical tolerances and resource limits shared by every module."""

from __future__ import annotations

import contextlib
import dataclasses
from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    norm_tol: float = 1e-12
    """Allowed deviation of ``||a||_2`` from 1 when a state is built unnormalized."""
    zero_vector_floor: float = 1e-300
    max_total_dim: int = 2**20
    """Largest number of amplitudes a state may hold."""
    max_reduced_dim: int = 4096
    """Largest reduced density matrix built by the partial-trace oracle."""
    rank_rtol: float = 1e-10
    """Singular values at or below ``rank_rtol * sigma_max`` count as zero."""
    spectrum_norm_tol: float = 1e-9
    zero_log_floor: float = 1e-15
    """Squared singular values below this contribute nothing to an entropy."""
    entropy_zero: float = 1e-12
    """Any bipartite entropy below this forces the geometric mean to zero."""
    eig_negative_tol: float = 1e-12
    outcome_floor: float = 1e-14
    violation_tol: float = 1e-9
    completeness_tol: float = 1e-10


_settings = Settings()


def get_settings() -> Settings:
    return _settings


def set_settings(**changes) -> Settings:
    """Replace fields of the global settings record and return the new record."""
    global _settings
    _settings = dataclasses.replace(_settings, **changes)
    return _settings


@contextlib.contextmanager
def override(**changes):
    """Temporarily change settings, e.g. ``with override(max_total_dim=64): ...``."""
    old = _settings
    try:
        yield set_settings(**changes)
    finally:
        set_settings(**dataclasses.asdict(old))
