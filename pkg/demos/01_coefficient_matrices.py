"""Coefficient matrices, their singular values, and the entropy they encode.

Run:  python demos/01_coefficient_matrices.py
"""
import numpy as np

import mapent as me

# A 3-qubit GHZ state.  Party 1 is the most significant digit, so the two
# nonzero amplitudes sit at flat indices 0 (|000>) and 7 (|111>).
psi = me.ghz(3, 2)
print("GHZ amplitudes:", np.round(psi.amplitudes.real, 4))

# C_{12}: rows are the digits of parties 1,2, columns the digit of party 3.
cm = me.coefficient_matrix(psi, [1, 2])
print("C_12 =\n", np.round(cm.entries.real, 4))

# Its nonzero singular values are both 1/sqrt(2); the squared values are the
# eigenvalues of the reduced state on parties 1,2, so the entropy is 1 bit.
sp = me.singular_values(cm)
print("singular values:", sp.singular_values, "rank:", sp.rank)
print("entropy (bits):", me.entropy_from_spectrum(sp))

# The same spectrum read from an explicit partial trace and a Jacobi
# eigensolver: a second route that never touches the reshape above.
rho = me.reduced_density_matrix(psi, [1, 2])
print("partial-trace eigenvalues:", np.round(me.hermitian_eigenvalues(rho), 12))

# A random qubit-qutrit-qubit state: compare the two routes on every split.
phi = me.random_state((2, 3, 2), seed=1)
for b in me.bipartitions(phi.n):
    ev = me.hermitian_eigenvalues(me.reduced_density_matrix(phi, b))
    sv2 = me.spectrum(phi, b).probabilities
    gap = np.max(np.abs(ev[: sv2.size] - sv2))
    print(f"rows={b!s:8} entropy={me.bipartite_entropy(phi, b):.6f}  |eig - sv^2| = {gap:.1e}")
