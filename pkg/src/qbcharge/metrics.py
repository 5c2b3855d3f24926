"""Speed limit, charging time, charging rate and stored work."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .config import DEFAULT, Tolerances
from .errors import Degenerate, DimMismatch, NotFullyCharging, QslViolation
from .numerics import as_hermitian, hermitian_eig
from .schemes import RealizedScheme

ML_CONVENTION = "ground-shifted"


@dataclass(frozen=True)
class QslBreakdown:
    mt_term: float   # pi / (2 dH)
    ml_term: float   # pi / (2 (<H> - E_min))
    tau: float


@dataclass(frozen=True)
class RateResult:
    T: float
    tau: float
    eta: float
    gamma: float


def qsl_from_moments(mean: float, variance: float, e_min: float,
                     tol: Tolerances = DEFAULT) -> QslBreakdown:
    spread = math.sqrt(max(variance, 0.0))
    excess = mean - e_min
    if spread < tol.degenerate or excess < tol.degenerate:
        raise Degenerate("initial state is an eigenstate of the charging Hamiltonian")
    mt = math.pi / (2 * spread)
    ml = math.pi / (2 * excess)
    return QslBreakdown(mt, ml, max(mt, ml))


def qsl_tau(H, psi0, tol: Tolerances = DEFAULT) -> QslBreakdown:
    """Mandelstam-Tamm / Margolus-Levitin time for ``psi0`` under ``H``.

    The mean-energy term is measured from the ground energy of ``H``.
    """
    H = as_hermitian(H, tol)
    psi0 = np.asarray(psi0, dtype=np.complex128)
    if psi0.shape[0] != H.shape[0]:
        raise DimMismatch(f"state dim {psi0.shape[0]} vs Hamiltonian dim {H.shape[0]}")
    Hpsi = H @ psi0
    mean = float(np.real(np.vdot(psi0, Hpsi)))
    second = float(np.real(np.vdot(Hpsi, Hpsi)))
    e_min = float(hermitian_eig(H).values[0])
    return qsl_from_moments(mean, second - mean**2, e_min, tol)


def scheme_qsl(scheme: RealizedScheme, tol: Tolerances = DEFAULT) -> QslBreakdown:
    if scheme.is_parallel:
        # each local term has spectrum {0, alpha_j}; on |down> its mean is alpha_j/2
        # and its variance alpha_j^2/4
        al = scheme.alphas
        return qsl_from_moments(float(np.sum(al)) / 2, float(np.sum(al**2)) / 4, 0.0, tol)
    psi0 = np.zeros(scheme.d + 1, dtype=np.complex128)
    psi0[0] = 1.0
    return qsl_tau(scheme.H, psi0, tol)


def _fidelity_slope(scheme: RealizedScheme, t: float) -> float:
    # d/dt |p_d|^2
    _, pd = scheme.pair_amplitudes(t)
    _, dpd = scheme.pair_derivatives(t)
    return 2.0 * float(np.real(np.conj(pd) * dpd))


def charging_time(scheme: RealizedScheme, t_max: float | None = None,
                  tol: float = DEFAULT.full_charging) -> float:
    """Earliest time at which ``|<u_d|psi(t)>|`` reaches ``1 - tol``.

    Scans a grid with at least 16 points per fastest oscillation, then
    locates each candidate maximum by a root search on the slope of the
    target fidelity.
    """
    if not scheme.fully_charging_capable:
        raise NotFullyCharging(f"{scheme.describe()} cannot fully charge")
    width = scheme.spectral_width
    if t_max is None:
        t_max = scheme.default_horizon()
    step = math.pi / (8 * width)
    n = int(math.ceil(t_max / step)) + 1
    times = np.linspace(0.0, t_max, n)
    _, pd = scheme.pair_amplitudes(times)
    f = np.abs(pd) ** 2

    for i in range(1, n):
        right = f[i + 1] if i + 1 < n else -np.inf
        if not (f[i] >= f[i - 1] and f[i] >= right) or f[i] < 0.5:
            continue
        t_star = _refine_peak(scheme, times[i - 1], times[min(i + 1, n - 1)], times[i])
        if 1.0 - abs(scheme.pair_amplitudes(t_star)[1]) <= tol:
            return t_star
    raise NotFullyCharging(f"{scheme.describe()} does not reach the target before t={t_max:.6g}")


def _refine_peak(scheme: RealizedScheme, lo: float, hi: float, guess: float) -> float:
    g_lo, g_mid, g_hi = (_fidelity_slope(scheme, x) for x in (lo, guess, hi))
    if g_mid == 0.0:
        return guess
    if g_lo > 0 > g_mid:
        a, b = lo, guess
    elif g_mid > 0 > g_hi:
        a, b = guess, hi
    else:
        return guess
    return brentq(lambda x: _fidelity_slope(scheme, x), a, b, xtol=DEFAULT.refine_t, rtol=1e-15)


def charging_rate(tau: float, T: float, n_qubits: int = 1, tol: Tolerances = DEFAULT) -> RateResult:
    if tau <= 0 or T <= 0:
        raise ValueError("tau and T must be positive")
    eta = tau / T
    if eta > 1 + tol.qsl_violation:
        raise QslViolation(f"charging time {T!r} is below the speed limit {tau!r}")
    return RateResult(T=T, tau=tau, eta=eta, gamma=math.sqrt(n_qubits) * eta)


def snapped_ceil(x: float, tol: float = DEFAULT.integer_snap) -> int:
    """Ceiling that ignores float noise just above an integer."""
    return int(math.ceil(x - tol * max(1.0, abs(x))))


def conjecture_rhs(n_qubits: int, eta: float, tol: Tolerances = DEFAULT) -> int:
    """``ceil(N eta^2)``, the depth the conjecture demands at rate ``eta``."""
    if not 0 < eta <= 1 + tol.qsl_violation:
        raise ValueError(f"eta must lie in (0, 1], got {eta!r}")
    return max(1, snapped_ceil(n_qubits * eta * eta, tol.integer_snap))


def stored_work(psi_full, n_qubits: int) -> float:
    """``<sum_j sigma^z_j> + N`` for a full-register state."""
    psi = np.asarray(psi_full, dtype=np.complex128).ravel()
    if psi.shape[0] != 2**n_qubits:
        raise DimMismatch(f"state has {psi.shape[0]} amplitudes, expected 2^{n_qubits}")
    idx = np.arange(psi.shape[0])
    ups = np.zeros(psi.shape[0])
    for q in range(n_qubits):
        ups += (idx >> q) & 1
    # sigma^z = 2 n_up - 1 per qubit, so sum sigma^z + N = 2 * (number of ups)
    return float(np.sum(np.abs(psi) ** 2 * 2 * ups))


def scheme_rate(scheme: RealizedScheme, T: float | None = None,
                tol: Tolerances = DEFAULT) -> tuple[QslBreakdown, RateResult]:
    """Speed limit and rate for a fully charging scheme; finds ``T`` if not given."""
    if T is None:
        T = charging_time(scheme, tol=tol.full_charging)
    q = scheme_qsl(scheme, tol)
    return q, charging_rate(q.tau, T, scheme.n_qubits, tol)
