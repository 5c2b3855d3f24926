"""
Entanglement depth of pure qubit states.

Two routes: a cheap lower bound from the weight of one locally orthonormal
pair of product states, and an exact oracle that finds every pure
(factorizable) subset of qubits and searches the partitions built from them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .config import DEFAULT, Tolerances
from .errors import BadSubset, NoEmbedding, PairNotOrthonormal, TooLarge
from .metrics import charging_time
from .schemes import RealizedScheme


@dataclass(frozen=True)
class PairCoefficients:
    p0: complex
    pbar: complex

    @property
    def product(self) -> float:
        return abs(self.p0 * self.pbar)


@dataclass(frozen=True)
class DepthCertificate:
    bound: int
    product: float
    t_star: float
    n_qubits: int


@dataclass(frozen=True)
class OracleResult:
    depth: int
    separability: int
    witness: tuple[tuple[int, ...], ...]


# --------------------------------------------------------------------------
# Lower bound


def thm1_bound(n_qubits: int, product: float, tol: Tolerances = DEFAULT) -> int:
    """Depth lower bound ``ceil(N / floor(log2(1/|p0 pbar|)))``.

    The product is clamped to 1/2. The floor is taken with a small upward
    guard so a product that rounds just above ``2^-m`` still counts as
    ``2^-m``; that can only lower the bound.
    """
    if product <= 0 or not math.isfinite(product):
        return 1
    product = min(float(product), 0.5)
    exponent = math.floor(-math.log2(product) + tol.integer_snap)
    if exponent >= n_qubits:
        return 1
    return -(-n_qubits // max(exponent, 1))


def _z_pair(n_qubits: int):
    down = np.array([1, 0], dtype=np.complex128)
    up = np.array([0, 1], dtype=np.complex128)
    return [(down, up)] * n_qubits


def pair_product(psi, n_qubits: int | None = None, pair=None,
                 tol: Tolerances = DEFAULT) -> PairCoefficients:
    """Amplitudes of ``psi`` on a locally orthonormal pair of product states.

    ``pair`` is a list of ``(nu0, nu0bar)`` single-qubit vectors, one per
    qubit, in (down, up) components; it defaults to all-down / all-up. If
    ``n_qubits`` is omitted and ``psi`` is not a register state, ``psi`` is
    read as ladder amplitudes with the pair at its two ends.
    """
    psi = np.asarray(psi, dtype=np.complex128).ravel()
    if n_qubits is None:
        n_float = math.log2(psi.shape[0])
        if pair is None and not n_float.is_integer():
            return PairCoefficients(complex(psi[0]), complex(psi[-1]))
        n_qubits = int(round(n_float))
    if psi.shape[0] != 2**n_qubits:
        raise ValueError(f"expected 2^{n_qubits} amplitudes, got {psi.shape[0]}")
    if pair is None:
        return PairCoefficients(complex(psi[0]), complex(psi[-1]))
    if len(pair) != n_qubits:
        raise PairNotOrthonormal(f"need {n_qubits} local pairs, got {len(pair)}")
    v0 = np.ones(1, dtype=np.complex128)
    v1 = np.ones(1, dtype=np.complex128)
    for q, (a, b) in enumerate(pair):
        a = np.asarray(a, dtype=np.complex128)
        b = np.asarray(b, dtype=np.complex128)
        if (abs(np.vdot(a, b)) > tol.pair_orthogonality
                or abs(np.vdot(a, a) - 1) > tol.pair_orthogonality
                or abs(np.vdot(b, b) - 1) > tol.pair_orthogonality):
            raise PairNotOrthonormal(f"qubit {q}: local vectors are not orthonormal")
        v0 = np.kron(a, v0)
        v1 = np.kron(b, v1)
    return PairCoefficients(complex(np.vdot(v0, psi)), complex(np.vdot(v1, psi)))


def max_pair_product(scheme: RealizedScheme, grid: int = 4096, T: float | None = None,
                     tol: Tolerances = DEFAULT) -> DepthCertificate:
    """Maximize ``|p_0(t) p_d(t)|`` over ``[0, T]`` and convert to a depth bound."""
    if T is None:
        T = charging_time(scheme, tol=tol.full_charging)
    times = np.linspace(0.0, T, grid)
    p0, pd = scheme.pair_amplitudes(times)
    prod = np.abs(p0 * pd)
    i = int(np.argmax(prod))
    best_t, best = float(times[i]), float(prod[i])
    lo, hi = times[max(i - 1, 0)], times[min(i + 1, grid - 1)]
    if hi > lo:
        res = minimize_scalar(lambda x: -float(np.abs(np.prod(scheme.pair_amplitudes(x)))),
                              bounds=(lo, hi), method="bounded",
                              options={"xatol": tol.refine_t})
        if -res.fun > best:
            best_t, best = float(res.x), float(-res.fun)
    return DepthCertificate(thm1_bound(scheme.n_qubits, best, tol), best, best_t, scheme.n_qubits)


# --------------------------------------------------------------------------
# Exact oracle


def _n_from_state(psi: np.ndarray) -> int:
    n = int(round(math.log2(psi.shape[0])))
    if 2**n != psi.shape[0]:
        raise ValueError(f"length {psi.shape[0]} is not a power of two")
    return n


def _purity_of_mask(tensor: np.ndarray, n: int, mask: int) -> float:
    # tensor axis a holds qubit n-1-a
    inside = [n - 1 - q for q in range(n) if mask >> q & 1]
    outside = [n - 1 - q for q in range(n) if not mask >> q & 1]
    m = np.transpose(tensor, inside + outside).reshape(2 ** len(inside), -1)
    gram = m @ m.conj().T if m.shape[0] <= m.shape[1] else m.conj().T @ m
    return float(np.sum(np.abs(gram) ** 2))


def reduced_purity(psi_full, subset, tol: Tolerances = DEFAULT) -> float:
    """``Tr(rho_S^2)`` for the reduced state on qubit set ``subset``."""
    psi = np.asarray(psi_full, dtype=np.complex128).ravel()
    n = _n_from_state(psi)
    if n > tol.oracle_cap:
        raise TooLarge(f"N={n} exceeds oracle cap {tol.oracle_cap}")
    subset = sorted(set(int(q) for q in subset))
    if not subset or len(subset) >= n or subset[0] < 0 or subset[-1] >= n:
        raise BadSubset(f"subset {subset} must be a nonempty proper subset of 0..{n - 1}")
    mask = sum(1 << q for q in subset)
    return _purity_of_mask(psi.reshape((2,) * n), n, mask)


def pure_subset_table(psi_full, tol: Tolerances = DEFAULT) -> np.ndarray:
    """Boolean table over masks: is the reduced state on that subset pure?"""
    psi = np.asarray(psi_full, dtype=np.complex128).ravel()
    n = _n_from_state(psi)
    if n > tol.oracle_cap:
        raise TooLarge(f"N={n} exceeds oracle cap {tol.oracle_cap}")
    psi = psi / np.linalg.norm(psi)
    full = (1 << n) - 1
    pure = np.zeros(1 << n, dtype=bool)
    pure[full] = True
    tensor = psi.reshape((2,) * n)
    for mask in range(1, full):
        comp = full ^ mask
        if comp < mask:
            pure[mask] = pure[comp]  # a pure global state has equal spectra on S and its complement
            continue
        pure[mask] = _purity_of_mask(tensor, n, mask) >= 1.0 - tol.purity
    return pure


def _partition_dp(pure: np.ndarray, n: int):
    full = (1 << n) - 1
    size = [bin(m).count("1") for m in range(1 << n)]
    depth = [0] * (1 << n)
    blocks = [0] * (1 << n)
    for mask in range(1, full + 1):
        low = mask & -mask
        rest = mask ^ low
        best_depth, best_blocks = n + 1, 0
        sub = rest
        while True:
            block = sub | low
            if pure[block]:
                other = mask ^ block
                dd = max(size[block], depth[other])
                if dd < best_depth:
                    best_depth = dd
                bb = 1 + blocks[other]
                if bb > best_blocks:
                    best_blocks = bb
            if sub == 0:
                break
            sub = (sub - 1) & rest
        depth[mask] = best_depth
        blocks[mask] = best_blocks
    return depth, blocks, size


def exact_depth(psi_full, tol: Tolerances = DEFAULT) -> OracleResult:
    """Exact entanglement depth, separability number and a witness partition.

    Every subset of qubits is tested for a pure reduced state; a bitmask
    dynamic program over partitions into such subsets then gives the
    smallest achievable largest block (the depth) and the largest
    achievable number of blocks. The witness is the depth-attaining
    partition whose block masks, each holding the lowest remaining qubit,
    form the lexicographically smallest sequence.

    Masks are only meaningful for a pure global state; every subset of an
    unentangled qubit is tested, so cost grows as ``3^N``.
    """
    psi = np.asarray(psi_full, dtype=np.complex128).ravel()
    n = _n_from_state(psi)
    pure = pure_subset_table(psi, tol)
    depth, blocks, size = _partition_dp(pure, n)
    full = (1 << n) - 1
    target = depth[full]

    witness = []
    mask = full
    while mask:
        low = mask & -mask
        rest = mask ^ low
        candidates = []
        sub = rest
        while True:
            block = sub | low
            if pure[block] and size[block] <= target and depth[mask ^ block] <= target:
                candidates.append(block)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        block = min(candidates)
        witness.append(tuple(q for q in range(n) if block >> q & 1))
        mask ^= block
    return OracleResult(depth=target, separability=blocks[full], witness=tuple(witness))


def resource_depth(scheme: RealizedScheme, grid: int = 64, tol: Tolerances = DEFAULT,
                   mode: str = "lb", T: float | None = None) -> int:
    """Maximum entanglement depth over the charging window, bounded or exact."""
    if mode == "lb":
        return max_pair_product(scheme, grid=max(grid, 2), T=T, tol=tol).bound
    if mode != "exact":
        raise ValueError(f"mode must be 'lb' or 'exact', got {mode!r}")
    if not scheme.is_parallel and scheme.embedding is None:
        raise NoEmbedding(f"{scheme.describe()} has no full-register embedding")
    if scheme.n_qubits > tol.oracle_cap:
        raise TooLarge(f"N={scheme.n_qubits} exceeds oracle cap {tol.oracle_cap}")
    if T is None:
        T = charging_time(scheme, tol=tol.full_charging)
    times = _grid_with_midpoint(T, grid)
    return max(exact_depth(scheme.full_state(t), tol).depth for t in times)


def _grid_with_midpoint(T: float, grid: int) -> np.ndarray:
    # always sample T/2, where the SU(2)-type ladders peak
    return np.unique(np.concatenate([np.linspace(0.0, T, grid), [0.5 * T]]))
