"""Numerical tolerances shared by every module."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    hermitian: float = 1e-12       # relative to max |entry|
    state_norm: float = 1e-10
    eig_residual: float = 1e-10    # relative to ||H||
    mirror: float = 1e-12
    full_charging: float = 1e-9    # 1 - |<u_d|psi(T)>|
    refine_t: float = 1e-12
    purity: float = 1e-9
    pair_orthogonality: float = 1e-12
    pair_product_max: float = 0.5 + 1e-12
    integer_snap: float = 1e-9     # guard for floor/ceil of float results
    qsl_violation: float = 1e-9
    degenerate: float = 1e-12
    oracle_cap: int = 14           # max qubits for full-register work
    dense_cap: int = 12            # max qubits for dense 2^N x 2^N matrices


DEFAULT = Tolerances()
