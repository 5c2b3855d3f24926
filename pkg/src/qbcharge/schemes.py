"""
Charging Hamiltonians and their closed-form evolutions.

Qubit convention used throughout the package: spin-down is bit 0, spin-up is
bit 1, and qubit ``q`` is bit ``q`` of the basis index (little-endian). The
all-down register is index 0 and the all-up register is index ``2**N - 1``.
Single-qubit matrices are written in the (down, up) ordering.

Every scheme acts on a charging ladder ``u_0 ... u_d`` with ``u_0`` all-down
and ``u_d`` all-up. Parallel schemes never build a ladder matrix; they carry
one local field per qubit instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import BadOrdering, Degenerate, DimMismatch, NoEmbedding, NonPositiveCoupling, TooLarge, ZeroField
from .numerics import EigenSystem, as_hermitian, basis_vector, hermitian_eig

# (down, up) ordering
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, 1j], [-1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[-1, 0], [0, 1]], dtype=np.complex128)


# --------------------------------------------------------------------------
# Scheme descriptors


@dataclass(frozen=True)
class SU2Spec:
    d: int
    alpha1: float
    alpha2: float = 0.0
    alpha3: float = 0.0

    @classmethod
    def polar(cls, d: int, magnitude: float, theta: float = 0.0) -> "SU2Spec":
        return cls(d, magnitude * math.cos(theta), magnitude * math.sin(theta), 0.0)

    @property
    def magnitude(self) -> float:
        return math.sqrt(self.alpha1**2 + self.alpha2**2 + self.alpha3**2)

    @property
    def theta(self) -> float:
        """Azimuth of the in-plane field; the phase entering the ladder amplitudes."""
        return math.atan2(self.alpha2, self.alpha1)

    def describe(self) -> str:
        return f"su2(d={self.d},alpha=({self.alpha1!r},{self.alpha2!r},{self.alpha3!r}))"


@dataclass(frozen=True)
class ParallelSpec:
    n_qubits: int
    k: tuple[int, ...]
    alpha_base: float = 1.0
    theta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(x) for x in self.k))
        if len(self.k) != self.n_qubits:
            raise DimMismatch(f"need one k per qubit, got {len(self.k)} for N={self.n_qubits}")
        if any(x < 0 for x in self.k):
            raise ValueError("k values must be nonnegative integers")
        if self.alpha_base <= 0:
            raise ValueError("alpha_base must be positive")

    def describe(self) -> str:
        return f"parallel(N={self.n_qubits},k={list(self.k)},alpha={self.alpha_base!r},theta={self.theta!r})"


@dataclass(frozen=True)
class TridiagSpec:
    b: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(float(x) for x in self.b))

    def describe(self) -> str:
        return f"tridiag(b={list(self.b)})"


@dataclass(frozen=True)
class Tridiag3Spec:
    lambda1: float
    lambda2: float

    def describe(self) -> str:
        return f"tridiag3(lambda1={self.lambda1!r},lambda2={self.lambda2!r})"


@dataclass(frozen=True)
class HybridSpec:
    n_qubits: int
    d: int
    theta: float = 0.0

    def describe(self) -> str:
        return f"hybrid(N={self.n_qubits},d={self.d},theta={self.theta!r})"


# --------------------------------------------------------------------------
# Realized schemes


@dataclass(frozen=True, eq=False)
class RealizedScheme:
    """A charging Hamiltonian ready for evolution.

    ``H`` is the ladder matrix of dimension ``d + 1`` (``None`` for parallel
    schemes). ``embedding`` holds the ladder states ``u_j`` as columns of a
    ``2**N x (d+1)`` array when the register is small enough to write out.
    """

    spec: object
    n_qubits: int
    d: int
    H: np.ndarray | None = None
    embedding: np.ndarray | None = None
    full_H: np.ndarray | None = None
    fully_charging_capable: bool = True
    mirror_symmetric: bool | None = None
    alphas: np.ndarray | None = None
    theta: float = 0.0
    meta: dict = field(default_factory=dict)

    @property
    def is_parallel(self) -> bool:
        return self.H is None

    @cached_property
    def eig(self) -> EigenSystem:
        if self.H is None:
            raise TypeError("parallel schemes have no ladder Hamiltonian")
        return hermitian_eig(self.H)

    @property
    def spectral_width(self) -> float:
        if self.is_parallel:
            return float(np.sum(self.alphas))
        return float(self.eig.values[-1] - self.eig.values[0])

    def default_horizon(self) -> float:
        """Upper limit for the charging-time search."""
        if self.is_parallel:
            return 2.0 * parallel_closed_form_time(self.spec)
        vals = self.eig.values
        gaps = np.diff(vals)
        gaps = gaps[gaps > 1e-9 * max(1.0, self.spectral_width)]
        horizon = 32 * math.pi / self.spectral_width
        if gaps.size:
            horizon = max(horizon, 4 * math.pi / float(gaps.min()))
        return horizon

    # ---- amplitudes -----------------------------------------------------

    def coefficients(self, t) -> np.ndarray:
        """Ladder amplitudes ``p_0 .. p_d``; shape ``(d+1,)`` or ``(len(t), d+1)``."""
        if self.is_parallel:
            raise TypeError("parallel schemes only expose pair amplitudes")
        scalar = np.ndim(t) == 0
        eig = self.eig
        c0 = eig.vectors.conj()[0]  # <E_k|u_0>
        times = np.atleast_1d(np.asarray(t, dtype=float))
        phases = np.exp(-1j * np.outer(times, eig.values))
        out = (phases * c0) @ eig.vectors.T
        return out[0] if scalar else out

    def pair_amplitudes(self, t):
        """``(p_0(t), p_d(t))``: amplitudes on all-down and all-up."""
        if self.is_parallel:
            a, b = _parallel_factors(self.alphas, self.theta, t)
            return np.prod(a, axis=-1), np.prod(b, axis=-1)
        c = self.coefficients(t)
        return c[..., 0], c[..., -1]

    def pair_derivatives(self, t):
        """Time derivatives of ``pair_amplitudes`` at scalar ``t``."""
        if self.is_parallel:
            al = self.alphas
            a, b = _parallel_factors(al, self.theta, t)
            da = -0.5 * al * np.sin(0.5 * al * t)
            db = -1j * np.exp(-1j * self.theta) * 0.5 * al * np.cos(0.5 * al * t)
            return _product_rule(a, da), _product_rule(b, db)
        psi = self.coefficients(t)
        dpsi = -1j * (self.H @ psi)
        return dpsi[0], dpsi[-1]

    def full_state(self, t) -> np.ndarray:
        """Evolved state on the full register (needs an embedding or a parallel scheme)."""
        if self.is_parallel:
            if self.n_qubits > DEFAULT.oracle_cap:
                raise TooLarge(f"N={self.n_qubits} exceeds oracle cap {DEFAULT.oracle_cap}")
            a, b = _parallel_factors(self.alphas, self.theta, t)
            out = np.ones(1, dtype=np.complex128)
            for q in range(self.n_qubits):
                out = np.kron(np.array([a[q], b[q]]), out)
            return out
        if self.embedding is None:
            raise NoEmbedding(f"{self.spec.describe()} has no full-register embedding")
        return self.embedding @ self.coefficients(t)

    def describe(self) -> str:
        return self.spec.describe()


def _parallel_factors(alphas, theta, t):
    t = np.asarray(t, dtype=float)[..., None]
    a = np.cos(0.5 * alphas * t).astype(np.complex128)
    b = -1j * np.exp(-1j * theta) * np.sin(0.5 * alphas * t)
    return a, b


def _product_rule(f, df) -> complex:
    # d/dt prod f_j = sum_j df_j prod_{i != j} f_i, without dividing by f_j
    f = np.ravel(f)
    df = np.ravel(df)
    left = np.concatenate([[1.0], np.cumprod(f)[:-1]])
    right = np.concatenate([np.cumprod(f[::-1])[:-1][::-1], [1.0]])
    return complex(np.sum(df * left * right))


# --------------------------------------------------------------------------
# SU(2) generators and schemes


@dataclass(frozen=True)
class SpinGenerators:
    d: int
    jx: np.ndarray
    jy: np.ndarray
    jz: np.ndarray


def ladder_factors(d: int) -> np.ndarray:
    k = np.arange(1, d + 1)
    return np.sqrt(k * (d - k + 1.0))


def su2_generators(d: int) -> SpinGenerators:
    """Spin-d/2 generators in the ladder basis ordered from m = -d/2 up to d/2."""
    if d < 1:
        raise ValueError("d must be at least 1")
    f = ladder_factors(d)
    raise_op = np.diag(f, -1).astype(np.complex128)  # |u_{k}> -> f_k |u_{k+1}>
    lower_op = raise_op.T
    jx = 0.5 * (raise_op + lower_op)
    jy = (raise_op - lower_op) / 2j
    jz = np.diag(np.arange(d + 1) - d / 2).astype(np.complex128)
    return SpinGenerators(d, jx, jy, jz)


def build_su2(spec: SU2Spec, n_qubits: int | None = None, tol: Tolerances = DEFAULT) -> RealizedScheme:
    if spec.d < 1:
        raise ValueError("d must be at least 1")
    mag = spec.magnitude
    if mag == 0:
        raise ZeroField("alpha vector is zero")
    n = spec.d if n_qubits is None else int(n_qubits)
    if n < spec.d:
        raise ValueError(f"N={n} is smaller than the ladder length d={spec.d}")
    g = su2_generators(spec.d)
    H = spec.alpha1 * g.jx + spec.alpha2 * g.jy + spec.alpha3 * g.jz
    H = H + 0.5 * spec.d * mag * np.eye(spec.d + 1)
    return RealizedScheme(
        spec=spec,
        n_qubits=n,
        d=spec.d,
        H=H,
        embedding=_default_embedding(n, spec.d, tol),
        fully_charging_capable=(spec.alpha3 == 0),
        mirror_symmetric=(spec.alpha3 == 0),
        theta=spec.theta,
    )


def su2_coefficients(d: int, magnitude: float, theta: float, t, include_constant: bool = False) -> np.ndarray:
    """Closed-form ladder amplitudes of the SU(2) evolution.

    The constant ``d|alpha|/2`` only adds the global phase
    ``exp(-i d |alpha| t / 2)``; pass ``include_constant=True`` to keep it.
    """
    t_arr = np.asarray(t, dtype=float)
    half = 0.5 * magnitude * t_arr[..., None]
    j = np.arange(d + 1)
    binom = np.array([math.comb(d, int(x)) for x in j], dtype=float)
    # integer powers keep sin = 0 or cos = 0 exact
    s = (-1j * np.sin(half)) ** j
    c = np.cos(half).astype(np.complex128) ** (d - j)
    out = np.sqrt(binom) * np.exp(-1j * theta * j) * s * c
    if include_constant:
        out = out * np.exp(-0.5j * d * magnitude * t_arr)[..., None]
    return out


# --------------------------------------------------------------------------
# Parallel schemes


def parallel_alphas(spec: ParallelSpec) -> np.ndarray:
    k = np.asarray(spec.k, dtype=float)
    return spec.alpha_base * (1 + 4 * k) / (1 + 4 * k[0])


def parallel_closed_form_time(spec: ParallelSpec) -> float:
    return math.pi * (1 + 4 * spec.k[0]) / spec.alpha_base


def parallel_eta_squared(k) -> Fraction:
    """Squared rate of a parallel scheme, exact: ``1 / sum (1 + 4 k_j)^2``."""
    return Fraction(1, sum((1 + 4 * int(x)) ** 2 for x in k))


def build_parallel(spec: ParallelSpec) -> RealizedScheme:
    return RealizedScheme(
        spec=spec,
        n_qubits=spec.n_qubits,
        d=spec.n_qubits,
        alphas=parallel_alphas(spec),
        theta=spec.theta,
    )


def parallel_local_hamiltonian(alpha: float, theta: float) -> np.ndarray:
    return 0.5 * alpha * (math.cos(theta) * SIGMA_X + math.sin(theta) * SIGMA_Y) + 0.5 * alpha * np.eye(2)


def parallel_amplitudes(spec: ParallelSpec, t) -> np.ndarray:
    """Per-qubit ``(a_j, b_j)`` on (down, up); shape ``(N, 2)``."""
    a, b = _parallel_factors(parallel_alphas(spec), spec.theta, float(t))
    return np.stack([a, b], axis=-1)


# --------------------------------------------------------------------------
# Tridiagonal schemes


def tridiag_matrix(b) -> np.ndarray:
    b = np.asarray(b, dtype=float)
    return (np.diag(b, 1) + np.diag(b, -1)).astype(np.complex128)


def is_mirror_symmetric(b, tol: float = DEFAULT.mirror) -> bool:
    b = np.asarray(b, dtype=float)
    return bool(np.all(np.abs(b - b[::-1]) <= tol * max(1.0, float(np.max(np.abs(b))))))


def mirror_sign_ratios(scheme: RealizedScheme) -> np.ndarray:
    """``<u_0|E_k> / <u_d|E_k>`` for each eigenvector, in ascending energy order.

    For a mirror-symmetric chain with positive couplings these are
    ``(-1)^(d-k)``: the top eigenvector is the nodeless, symmetric one.
    """
    V = scheme.eig.vectors
    ends = V[scheme.d]
    if np.any(np.abs(ends) < DEFAULT.degenerate):
        raise Degenerate("an eigenvector vanishes on the last ladder state")
    return np.real_if_close(V[0] / ends)


def build_tridiag(spec: TridiagSpec, n_qubits: int | None = None, tol: Tolerances = DEFAULT) -> RealizedScheme:
    b = spec.b
    if len(b) < 1:
        raise ValueError("need at least one coupling")
    if any(x <= 0 for x in b):
        raise NonPositiveCoupling(f"couplings must be positive, got {list(b)}")
    d = len(b)
    n = d if n_qubits is None else int(n_qubits)
    if n < d:
        raise ValueError(f"N={n} is smaller than the ladder length d={d}")
    mirror = is_mirror_symmetric(b, tol.mirror)
    return RealizedScheme(
        spec=spec,
        n_qubits=n,
        d=d,
        H=tridiag_matrix(b),
        embedding=_default_embedding(n, d, tol),
        fully_charging_capable=mirror,
        mirror_symmetric=mirror,
    )


def tridiag3_couplings(lambda1: float, lambda2: float) -> tuple[float, float, float]:
    if not lambda1 > lambda2:
        raise BadOrdering(f"need lambda1 > lambda2, got {lambda1!r} <= {lambda2!r}")
    if not lambda2 > 0:
        raise BadOrdering("lambda2 must be positive")
    b1 = math.sqrt(lambda1 * lambda2)
    return (b1, lambda1 - lambda2, b1)


def build_tridiag3(lambda1: float, lambda2: float, n_qubits: int | None = None,
                   tol: Tolerances = DEFAULT) -> RealizedScheme:
    b = tridiag3_couplings(lambda1, lambda2)
    base = build_tridiag(TridiagSpec(b), n_qubits, tol)
    expected = np.array([-lambda1, -lambda2, lambda2, lambda1])
    if not np.allclose(base.eig.values, expected, rtol=0, atol=1e-9 * lambda1):
        raise AssertionError(f"spectrum {base.eig.values} differs from {expected}")
    return RealizedScheme(
        spec=Tridiag3Spec(float(lambda1), float(lambda2)),
        n_qubits=base.n_qubits,
        d=3,
        H=base.H,
        embedding=base.embedding,
        fully_charging_capable=True,
        mirror_symmetric=True,
    )


def tridiag3_analytic_state(lambda1: float, lambda2: float, t) -> np.ndarray:
    """Closed-form ``exp(-i H t) u_0`` for the four-level mirror-symmetric chain."""
    if not lambda1 > lambda2 > 0:
        raise BadOrdering("need lambda1 > lambda2 > 0")
    l1, l2 = float(lambda1), float(lambda2)
    t = np.asarray(t, dtype=float)
    r = math.sqrt(l1 * l2)
    c1, c2 = np.cos(l1 * t), np.cos(l2 * t)
    s1, s2 = np.sin(l1 * t), np.sin(l2 * t)
    out = np.stack([
        l2 * c1 + l1 * c2,
        -1j * r * (s1 + s2),
        r * (c1 - c2),
        1j * (l1 * s2 - l2 * s1),
    ], axis=-1)
    return out / (l1 + l2)


@dataclass(frozen=True)
class AdmissibleRatio:
    case: str          # "i" or "ii"
    m: int
    n: int
    k: Fraction        # lambda1 / lambda2
    T_over_pi: Fraction

    @property
    def lambda1(self) -> float:
        return float(self.k)

    @property
    def lambda2(self) -> float:
        return 1.0

    @property
    def T(self) -> float:
        return math.pi * float(self.T_over_pi)


def tridiag3_admissible_ratios(m_max: int, n_max: int) -> list[AdmissibleRatio]:
    """Eigenvalue ratios of the d=3 chain that reach full charging, with lambda2 = 1.

    Case (i): ``k = (4n-1)/(4m+1)``, ``T = pi (1+4m)/2``.
    Case (ii): ``k = (4m+1)/(4n-1)``, ``T = pi (4n-1)/2``.
    Rows with identical ``(k, T)`` are kept once, first occurrence wins.
    """
    if m_max < 0 or n_max < 0:
        raise ValueError("m_max and n_max must be nonnegative")
    rows: list[AdmissibleRatio] = []
    seen: set[tuple[Fraction, Fraction]] = set()
    for m in range(0, m_max + 1):
        for n in range(1, n_max + 1):
            candidates = [
                ("i", Fraction(4 * n - 1, 4 * m + 1), Fraction(1 + 4 * m, 2)),
                ("ii", Fraction(4 * m + 1, 4 * n - 1), Fraction(4 * n - 1, 2)),
            ]
            for case, k, t_pi in candidates:
                if k <= 1 or (k, t_pi) in seen:
                    continue
                seen.add((k, t_pi))
                rows.append(AdmissibleRatio(case, m, n, k, t_pi))
    return rows


@dataclass(frozen=True)
class SpectrumCondition:
    holds: bool
    m: tuple[int, ...]
    phi0: float


def spectrum_condition_check(eigs, T: float, tol: float = 1e-9) -> SpectrumCondition:
    """Test ``E_k T = (2 m_k - k) pi + phi0`` with ``phi0 = E_0 T``."""
    if T <= 0:
        raise ValueError("T must be positive")
    eigs = np.asarray(eigs, dtype=float)
    phi0 = float(eigs[0] * T)
    k = np.arange(len(eigs))
    x = (eigs * T - phi0 + k * math.pi) / (2 * math.pi)
    m = np.rint(x)
    holds = bool(np.all(np.abs(x - m) <= tol))
    return SpectrumCondition(holds, tuple(int(v) for v in m), phi0)


# --------------------------------------------------------------------------
# Hybrid (block-flip) schemes


def hybrid_block_sizes(n_qubits: int, d: int) -> list[int]:
    """Block sizes for the hybrid ladder, contiguous and in ascending qubit order.

    ``d - 1`` blocks of ``ceil(N/d)`` qubits followed by one block with the
    remainder. When that remainder would be empty or negative the register is
    split as evenly as possible instead (largest blocks first), which keeps
    the largest block at ``ceil(N/d)``.
    """
    if not 1 <= d <= n_qubits:
        raise ValueError(f"need 1 <= d <= N, got d={d}, N={n_qubits}")
    k = -(-n_qubits // d)
    r = n_qubits - (d - 1) * k
    if r >= 1:
        return [k] * (d - 1) + [r]
    q, extra = divmod(n_qubits, d)
    return [q + 1] * extra + [q] * (d - extra)


def hybrid_block_masks(n_qubits: int, d: int) -> list[int]:
    masks, start = [], 0
    for size in hybrid_block_sizes(n_qubits, d):
        masks.append(((1 << size) - 1) << start)
        start += size
    return masks


def _check_register(n_qubits: int, cap: int):
    if n_qubits > cap:
        raise TooLarge(f"2^{n_qubits} amplitudes exceed the cap of 2^{cap}")


def hybrid_basis(n_qubits: int, d: int, j: int, tol: Tolerances = DEFAULT) -> np.ndarray:
    """Equal-weight superposition of all placements of ``j`` flipped blocks."""
    _check_register(n_qubits, tol.oracle_cap)
    if not 0 <= j <= d:
        raise ValueError(f"need 0 <= j <= d, got j={j}")
    masks = hybrid_block_masks(n_qubits, d)
    out = np.zeros(2**n_qubits, dtype=np.complex128)
    amp = 1.0 / math.sqrt(math.comb(d, j))
    for chosen in combinations(masks, j):
        out[sum(chosen)] = amp
    return out


def hybrid_embedding(n_qubits: int, d: int, tol: Tolerances = DEFAULT) -> np.ndarray:
    return np.stack([hybrid_basis(n_qubits, d, j, tol) for j in range(d + 1)], axis=1)


def _default_embedding(n_qubits: int, d: int, tol: Tolerances) -> np.ndarray | None:
    if n_qubits > tol.oracle_cap or d > n_qubits:
        return None
    return hybrid_embedding(n_qubits, d, tol)


def hybrid_evolved(n_qubits: int, d: int, theta: float, magnitude: float, t: float,
                   tol: Tolerances = DEFAULT) -> np.ndarray:
    """Product of block states ``cos(|a| t/2)|down..> - i e^{-i theta} sin(|a| t/2)|up..>``."""
    _check_register(n_qubits, tol.oracle_cap)
    c = math.cos(0.5 * magnitude * t)
    s = -1j * np.exp(-1j * theta) * math.sin(0.5 * magnitude * t)
    out = np.ones(1, dtype=np.complex128)
    for size in hybrid_block_sizes(n_qubits, d):
        block = np.zeros(2**size, dtype=np.complex128)
        block[0] = c
        block[-1] = s
        out = np.kron(block, out)  # later blocks sit on higher bits
    return out


def apply_hybrid_hamiltonian(n_qubits: int, d: int, psi, theta: float = 0.0) -> np.ndarray:
    """Act with the block-flip Hamiltonian on ``psi`` without forming the matrix.

    Each block operator is sigma^x on every block qubit, except the last one
    which carries ``cos(theta) sigma^x + sin(theta) sigma^y``; at ``theta = 0``
    it is the plain all-x string.
    """
    psi = np.asarray(psi, dtype=np.complex128)
    idx = np.arange(2**n_qubits)
    out = 0.5 * d * psi
    for mask in hybrid_block_masks(n_qubits, d):
        top = mask.bit_length() - 1
        # <i|O|i^mask> = e^{-i theta} if qubit `top` is up in i, else e^{+i theta}
        up = (idx >> top) & 1
        phase = np.where(up == 1, np.exp(-1j * theta), np.exp(1j * theta))
        if psi.ndim == 2:
            phase = phase[:, None]
        out = out + phase * psi[idx ^ mask]
    return out


def hybrid_hamiltonian(n_qubits: int, d: int, theta: float = 0.0, tol: Tolerances = DEFAULT) -> np.ndarray:
    """Dense block-flip Hamiltonian on the full register."""
    _check_register(n_qubits, tol.dense_cap)
    dim = 2**n_qubits
    return apply_hybrid_hamiltonian(n_qubits, d, np.eye(dim, dtype=np.complex128), theta)


def build_hybrid(spec: HybridSpec, tol: Tolerances = DEFAULT) -> RealizedScheme:
    """Realize the block-flip scheme; the ladder matrix is projected from the full register."""
    n, d = spec.n_qubits, spec.d
    _check_register(n, tol.oracle_cap)
    E = hybrid_embedding(n, d, tol)
    HE = apply_hybrid_hamiltonian(n, d, E, spec.theta)
    H = E.conj().T @ HE
    leak = np.linalg.norm(HE - E @ H)
    if leak > 1e-9:
        raise AssertionError(f"ladder subspace is not invariant (leak {leak:.3e})")
    full = hybrid_hamiltonian(n, d, spec.theta, tol) if n <= tol.dense_cap else None
    return RealizedScheme(
        spec=spec,
        n_qubits=n,
        d=d,
        H=as_hermitian(H),
        embedding=E,
        full_H=full,
        fully_charging_capable=True,
        mirror_symmetric=True,
        theta=spec.theta,
    )


# --------------------------------------------------------------------------


def target_fidelity(scheme: RealizedScheme, T: float) -> float:
    """``|<u_d| psi(T)>|``."""
    _, pd = scheme.pair_amplitudes(T)
    return float(abs(pd))


def check_full_charging(scheme: RealizedScheme, T: float, tol: float = DEFAULT.full_charging) -> bool:
    if T <= 0:
        raise ValueError("T must be positive")
    return 1.0 - target_fidelity(scheme, T) <= tol


def initial_ladder_state(scheme: RealizedScheme) -> np.ndarray:
    return basis_vector(scheme.d + 1, 0)


def target_ladder_state(scheme: RealizedScheme) -> np.ndarray:
    return basis_vector(scheme.d + 1, scheme.d)
