"""GHZ closed form, and the qutrit D3 family on nine parties.

Run:  python demos/03_ghz_and_d3.py        (the D3 sweep takes ~30 s)
"""
import mapent as me
from mapent.sweeps import check_ghz, sweep_d3

# Every coefficient matrix of a d-level GHZ state has d singular values equal
# to 1/sqrt(d), so each S_l is log2(d) and MAPE is (n // 2) * log2(d).
for r in check_ghz(range(2, 8), (2, 3, 4)):
    print(f"n={r.n} d={r.d}  mape={r.mape:.12f}  (n//2)log2 d={r.expected:.12f}")

# D3^9: symmetric qutrit states with l1 ones, l2 twos, l0 zeros.
rows = sweep_d3(9, workers=4)
best = max(rows, key=lambda r: r.mape)
print("\nD3^9 maximum at (l1, l2) =", (best.params["l1"], best.params["l2"]), f"mape={best.mape:.6f}")

print("\nslice l1 = 3")
print(" l2  rank_half     mape")
for r in rows:
    if r.params["l1"] == 3:
        print(f"{r.params['l2']:3d}  {r.rank_half:9d}  {r.mape:.5f}")

