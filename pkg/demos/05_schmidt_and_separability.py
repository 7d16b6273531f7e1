"""Schmidt-decomposable states, product states and the genuine-entanglement test.

Run:  python demos/05_schmidt_and_separability.py
"""
import math

import numpy as np

import mapent as me

# c0|0...0> + c1|1...1>: every single-party coefficient matrix has the same
# two singular values (|c0|, |c1|).
psi = me.schmidt_state(5, math.sqrt(0.9), math.sqrt(0.1))
for q in range(1, 6):
    print(f"C_{q}: singular values {np.round(me.spectrum(psi, [q]).singular_values, 6)}")

# Product states have rank-1 coefficient matrices everywhere, so MAPE = 0.
prod = me.product_state([me.random_single(d, seed=k) for k, d in enumerate((2, 3, 2, 3))])
print("\nproduct state mape:", me.mape(prod).m)
print("ranks:", {str(b): me.rank(me.coefficient_matrix(prod, b)) for b in me.bipartitions(4, 1)})

# Genuine multipartite entanglement <=> every coefficient matrix has rank > 1.
bell = me.ghz(2, 2)
for name, s in [
    ("GHZ(4,2)", me.ghz(4, 2)),
    ("Dicke(4,2)", me.dicke(4, 2)),
    ("Bell x Bell", me.tensor_product(bell, bell)),
    ("|0> x Bell", me.tensor_product(me.basis_state(2, 0), bell)),
]:
    v = me.is_genuinely_entangled(s)
    print(f"{name:12s} genuine={v.genuine}  witness={v.witness}  mape={me.mape(s).m:.4f}")
