"""MAPE across the n-qubit Dicke family, and the half-cut rank.

The data behind the "three, six and nine qubit" curves plus the 8-qubit
rank comparison.  Pipe to a file and plot with any tool you like.

Run:  python demos/02_dicke_states.py
"""
import mapent as me
from mapent.sweeps import sweep_dicke

for n in (3, 6, 9):
    print(f"\nn = {n}")
    print(" l1      mape   S_l")
    for row in sweep_dicke([n]):
        s = " ".join(f"{v:.4f}" for v in row.mems)
        print(f"{row.params['l1']:3d}  {row.mape:8.5f}   {s}")

# The curve is symmetric under l1 -> n - l1 (flip every qubit) and peaks at
# half filling.
print("\n8 qubits: rank of C over any 4 parties vs MAPE")
print(" k  rank    mape")
for row in sweep_dicke([8]):
    print(f"{row.params['l1']:2d}  {row.rank_half:4d}  {row.mape:.5f}")
# rank = k + 1 for k <= 4; both columns peak at k = 4.

# Any single Dicke state can be measured directly too:
print("\nW state MEMS:", me.mems(me.dicke(3, 1)).values)
