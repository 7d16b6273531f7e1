"""Random local instruments and numerical LOCC-monotonicity checks.

An instrument on one party is a list of Kraus operators ``A_k`` with
``sum_k A_k^dagger A_k = I``.  Applying it to ``|psi>`` yields post-measurement
states ``A_k|psi> / ||A_k|psi>||`` with probabilities ``||A_k|psi>||^2``.  An
entanglement monotone must satisfy ``sum_k p_k E(phi_k) <= E(psi)``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from ._config import get_settings
from .errors import DegenerateDrawError, DimensionMismatchError
from .gallery import random_state
from .measures import ape, l2_ape, mape
from .state import PureState, _wrap

__all__ = [
    "LocalInstrument",
    "LoccOutcome",
    "InstrumentOutcomes",
    "MonotonicityReport",
    "TrialRecord",
    "FuzzSummary",
    "random_instrument",
    "projective_instrument",
    "identity_instrument",
    "apply_instrument",
    "resolve_measure",
    "monotonicity_report",
    "trial_seeds",
    "run_trial",
    "fuzz_monotonicity",
    "summarize",
]


@dataclass(frozen=True, eq=False)
class LocalInstrument:
    party: int
    """1-based index of the party acted on."""
    kraus_ops: tuple[np.ndarray, ...] = field(repr=False)

    @property
    def d(self) -> int:
        return self.kraus_ops[0].shape[0]

    def completeness_error(self) -> float:
        """``|| sum_k A_k^dagger A_k - I ||_2``."""
        s = sum(a.conj().T @ a for a in self.kraus_ops)
        return float(np.linalg.norm(s - np.eye(self.d), 2))


@dataclass(frozen=True, eq=False)
class LoccOutcome:
    index: int
    probability: float
    post_state: PureState


@dataclass(frozen=True, eq=False)
class InstrumentOutcomes:
    """Outcomes kept after applying an instrument, plus the probability mass dropped."""

    outcomes: tuple[LoccOutcome, ...]
    dropped_mass: float = 0.0

    def __iter__(self) -> Iterator[LoccOutcome]:
        return iter(self.outcomes)

    def __len__(self):
        return len(self.outcomes)

    def __getitem__(self, k):
        return self.outcomes[k]

    @property
    def total_probability(self) -> float:
        return float(sum(o.probability for o in self.outcomes)) + self.dropped_mass


def _inv_sqrt_psd(s: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(s)
    return (v / np.sqrt(w)) @ v.conj().T


def random_instrument(
    party: int,
    d: int,
    outcomes: int,
    seed: int | None = None,
    max_attempts: int = 8,
) -> LocalInstrument:
    """Random complete instrument from Gaussian draws.

    Draw complex Gaussian matrices ``G_k`` and set ``A_k = G_k S^{-1/2}`` with
    ``S = sum_k G_k^dagger G_k``, which makes the set complete.  A numerically
    singular ``S`` triggers a fresh draw from the next seed substream.

    Raises
    ------
    DegenerateDrawError
        If ``max_attempts`` consecutive draws are singular.
    """
    if outcomes < 2 or d < 2:
        raise ValueError(f"need outcomes >= 2 and d >= 2, got outcomes={outcomes}, d={d}")
    root = np.random.SeedSequence(seed)
    for sub in root.spawn(max_attempts):
        rng = np.random.default_rng(sub)
        g = rng.standard_normal((outcomes, d, d)) + 1j * rng.standard_normal((outcomes, d, d))
        s = np.einsum("kji,kjl->il", g.conj(), g)
        if np.linalg.cond(s) > 1e12:
            continue
        r = _inv_sqrt_psd(s)
        ops = tuple(gk @ r for gk in g)
        inst = LocalInstrument(party, ops)
        if inst.completeness_error() < get_settings().completeness_tol:
            return inst
    raise DegenerateDrawError(f"no well-conditioned draw in {max_attempts} attempts")


def projective_instrument(party: int, d: int) -> LocalInstrument:
    """Computational-basis measurement ``{|j><j|}``."""
    ops = []
    for j in range(d):
        p = np.zeros((d, d), dtype=np.complex128)
        p[j, j] = 1.0
        ops.append(p)
    return LocalInstrument(party, tuple(ops))


def identity_instrument(party: int, d: int) -> LocalInstrument:
    return LocalInstrument(party, (np.eye(d, dtype=np.complex128),))


def apply_instrument(state: PureState, inst: LocalInstrument) -> InstrumentOutcomes:
    """Branch ``state`` over the outcomes of ``inst``.

    Outcomes with probability below ``outcome_floor`` are dropped; their mass is
    reported in ``dropped_mass``.
    """
    if not 1 <= inst.party <= state.n:
        raise DimensionMismatchError(f"party {inst.party} outside 1..{state.n}")
    axis = inst.party - 1
    d = state.dims[axis]
    if any(a.shape != (d, d) for a in inst.kraus_ops):
        raise DimensionMismatchError(f"Kraus operators must be {d}x{d} for party {inst.party}")
    floor = get_settings().outcome_floor
    t = state.as_tensor()
    kept, dropped = [], 0.0
    for k, a in enumerate(inst.kraus_ops):
        v = np.moveaxis(np.tensordot(a, t, axes=([1], [axis])), 0, axis).ravel()
        p = float(np.vdot(v, v).real)
        if p < floor:
            dropped += p
            continue
        kept.append(LoccOutcome(k, p, _wrap(state.profile, v / np.sqrt(p))))
    return InstrumentOutcomes(tuple(kept), dropped)


def resolve_measure(measure: str | Callable[[PureState], float]) -> Callable[[PureState], float]:
    """Map ``"mape"``, ``"l2"``/``"l2_ape"`` or ``"ape:<l>"`` to a callable."""
    if callable(measure):
        return measure
    if measure == "mape":
        return lambda s: mape(s).m
    if measure in ("l2", "l2_ape"):
        return l2_ape
    if measure.startswith("ape:"):
        level = int(measure.split(":", 1)[1])
        return lambda s: ape(s, level)
    raise ValueError(f"unknown measure {measure!r}")


@dataclass(frozen=True)
class MonotonicityReport:
    before: float
    avg_after: float
    violated: bool
    dropped_mass: float
    n_outcomes: int

    @property
    def excess(self) -> float:
        return self.avg_after - self.before


def monotonicity_report(
    state: PureState,
    inst: LocalInstrument,
    measure: str | Callable[[PureState], float] = "mape",
) -> MonotonicityReport:
    """Compare ``measure(state)`` with its average over the instrument's outcomes."""
    f = resolve_measure(measure)
    before = float(f(state))
    branches = apply_instrument(state, inst)
    avg_after = float(sum(o.probability * f(o.post_state) for o in branches))
    violated = avg_after > before + get_settings().violation_tol
    return MonotonicityReport(before, avg_after, violated, branches.dropped_mass, len(branches))


# --- fuzz harness -------------------------------------------------------------


@dataclass(frozen=True)
class TrialRecord:
    seed: int
    dims: tuple[int, ...]
    party: int
    outcomes: int
    before: float
    avg_after: float
    violated: bool


def trial_seeds(master_seed: int, trials: int) -> list[int]:
    """Per-trial seeds derived deterministically from ``master_seed``."""
    return [int(s) for s in np.random.SeedSequence(master_seed).generate_state(trials, dtype=np.uint32)]


def run_trial(
    seed: int,
    measure: str | Callable[[PureState], float] = "mape",
    n_choices: Sequence[int] = (3, 4, 5, 6),
    d_choices: Sequence[int] = (2, 3),
    outcome_choices: Sequence[int] = (2, 3),
) -> TrialRecord:
    """One random (state, instrument) pair, fully determined by ``seed``."""
    rng = np.random.default_rng(seed)
    n = int(rng.choice(n_choices))
    dims = tuple(int(x) for x in rng.choice(d_choices, size=n))
    party = int(rng.integers(1, n + 1))
    outcomes = int(rng.choice(outcome_choices))
    state_seed, inst_seed = (int(x) for x in rng.integers(0, 2**32, size=2))
    state = random_state(dims, state_seed)
    inst = random_instrument(party, dims[party - 1], outcomes, inst_seed)
    rep = monotonicity_report(state, inst, measure)
    return TrialRecord(seed, dims, party, outcomes, rep.before, rep.avg_after, rep.violated)


def fuzz_monotonicity(
    trials: int,
    seed: int = 0,
    measure: str | Callable[[PureState], float] = "mape",
    workers: int | None = None,
    **trial_kw,
) -> list[TrialRecord]:
    """Run ``trials`` independent random trials; results come back in seed order."""
    seeds = trial_seeds(seed, trials)
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(lambda s: run_trial(s, measure, **trial_kw), seeds))
    return [run_trial(s, measure, **trial_kw) for s in seeds]


@dataclass(frozen=True)
class FuzzSummary:
    trials: int
    violations: int
    max_excess: float
    """Largest ``avg_after - before`` seen (negative when every trial decreased)."""
    violating_seeds: tuple[int, ...]


def summarize(records: Sequence[TrialRecord]) -> FuzzSummary:
    bad = tuple(r.seed for r in records if r.violated)
    excess = max((r.avg_after - r.before for r in records), default=float("nan"))
    return FuzzSummary(len(records), len(bad), excess, bad)
