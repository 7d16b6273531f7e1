"""Does MAPE go up under local measurements?  (It must not, on average.)

Run:  python demos/04_locc_monotonicity.py
"""
import mapent as me
from mapent.locc import fuzz_monotonicity, summarize

# Measure qubit 1 of a GHZ state in the computational basis: both branches
# are product states, so the averaged MAPE drops from 1 to 0.
rep = me.monotonicity_report(me.ghz(3, 2), me.projective_instrument(1, 2))
print("GHZ + Z measurement:", rep)

# A generic random instrument on a random 4-party state.
psi = me.random_state((2, 3, 2, 3), seed=3)
inst = me.random_instrument(party=2, d=3, outcomes=3, seed=4)
for o in me.apply_instrument(psi, inst):
    print(f"outcome {o.index}: p={o.probability:.4f}  mape={me.mape(o.post_state).m:.4f}")
print("before:", me.mape(psi).m)

# Fuzz: 500 random (state, instrument) pairs.
for measure in ("mape", "l2"):
    s = summarize(fuzz_monotonicity(500, seed=0, measure=measure))
    print(f"{measure:5s}: {s.violations} violations in {s.trials} trials, max excess {s.max_excess:.3e}")
# Not finding an l2 counterexample proves nothing; only MAPE is guaranteed.
