"""
How much entanglement does a state hold?
========================================

Two answers. The cheap one reads two amplitudes, p0 and pbar, on a pair of
product states and turns |p0 pbar| into a lower bound on entanglement depth.
The expensive one tests every subset of qubits for a pure reduced state and
finds the finest partition. Here they are side by side.
"""

import numpy as np

from qbcharge import exact_depth, pair_product, thm1_bound

rng = np.random.default_rng(7)


def ghz(n):
    v = np.zeros(2**n, dtype=complex)
    v[0] = v[-1] = 2**-0.5
    return v


def w(n):
    v = np.zeros(2**n, dtype=complex)
    for q in range(n):
        v[1 << q] = n**-0.5
    return v


bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
up = np.array([0, 1], dtype=complex)
haar = rng.normal(size=32) + 1j * rng.normal(size=32)

states = {
    "GHZ_5": ghz(5),
    "W_4": w(4),
    "Bell x Bell x up": np.kron(up, np.kron(bell, bell)),
    "Haar, 5 qubits": haar / np.linalg.norm(haar),
}

print(f"{'state':18s} {'|p0 pbar|':>10s} {'bound':>6s} {'depth':>6s} {'blocks':>7s}  witness")
for name, psi in states.items():
    n = int(np.log2(psi.size))
    pc = pair_product(psi, n)
    res = exact_depth(psi)
    print(f"{name:18s} {pc.product:10.6f} {thm1_bound(n, pc.product):6d} {res.depth:6d} "
          f"{res.separability:7d}  {res.witness}")

# The bound is only as good as the pair. W states have no all-down weight,
# so the z pair sees nothing, while the oracle still finds depth 4.
