"""
Dense Hermitian linear algebra for small quantum systems.

Matrices are plain ``numpy`` complex arrays. Time evolution goes through an
eigendecomposition, which is exact up to rounding for the dimensions used
here (at most a few thousand).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import DimMismatch, NotHermitian


@dataclass(frozen=True)
class EigenSystem:
    values: np.ndarray   # ascending
    vectors: np.ndarray  # columns, gauge fixed

    def __len__(self) -> int:
        return len(self.values)

    def vector(self, k: int) -> np.ndarray:
        return self.vectors[:, k]


def as_hermitian(H, tol: Tolerances = DEFAULT) -> np.ndarray:
    H = np.asarray(H, dtype=np.complex128)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise DimMismatch(f"expected a square matrix, got shape {H.shape}")
    scale = float(np.max(np.abs(H))) if H.size else 0.0
    if scale > 0 and np.max(np.abs(H - H.conj().T)) > tol.hermitian * scale:
        raise NotHermitian("matrix is not conjugate symmetric")
    return H


def as_state(psi, tol: Tolerances = DEFAULT) -> np.ndarray:
    psi = np.asarray(psi, dtype=np.complex128).ravel()
    if abs(np.linalg.norm(psi) - 1.0) > tol.state_norm:
        raise ValueError(f"state is not normalized (norm {np.linalg.norm(psi)!r})")
    return psi


def fix_gauge(vectors: np.ndarray) -> np.ndarray:
    """Rotate each column so its first nonzero component is real positive."""
    vectors = np.array(vectors, dtype=np.complex128, copy=True)
    for k in range(vectors.shape[1]):
        col = vectors[:, k]
        cutoff = 1e-8 * np.max(np.abs(col))
        idx = int(np.argmax(np.abs(col) > cutoff))
        phase = col[idx] / abs(col[idx])
        vectors[:, k] = col / phase
        vectors[idx, k] = abs(col[idx])
    return vectors


def hermitian_eig(H, tol: Tolerances = DEFAULT) -> EigenSystem:
    """Ascending eigenvalues and gauge-fixed orthonormal eigenvectors of ``H``."""
    H = as_hermitian(H, tol)
    Hs = 0.5 * (H + H.conj().T)
    values, vectors = np.linalg.eigh(Hs)
    return EigenSystem(values=values, vectors=fix_gauge(vectors))


def evolve(H, psi, t: float, eig: EigenSystem | None = None) -> np.ndarray:
    """Return ``exp(-i H t) psi``."""
    psi = np.asarray(psi, dtype=np.complex128)
    if eig is None:
        eig = hermitian_eig(H)
    if psi.shape[0] != len(eig):
        raise DimMismatch(f"state has dim {psi.shape[0]}, Hamiltonian {len(eig)}")
    V = eig.vectors
    return V @ (np.exp(-1j * eig.values * t) * (V.conj().T @ psi))


def evolve_many(eig: EigenSystem, psi, times) -> np.ndarray:
    """Evolved states for every time in ``times``; shape ``(len(times), dim)``."""
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape[0] != len(eig):
        raise DimMismatch(f"state has dim {psi.shape[0]}, Hamiltonian {len(eig)}")
    times = np.atleast_1d(np.asarray(times, dtype=float))
    coeffs = eig.vectors.conj().T @ psi
    phases = np.exp(-1j * np.outer(times, eig.values))
    return (phases * coeffs) @ eig.vectors.T


def overlap(a, b) -> complex:
    """<a|b>, conjugate-linear in ``a``."""
    a = np.asarray(a, dtype=np.complex128).ravel()
    b = np.asarray(b, dtype=np.complex128).ravel()
    if a.shape != b.shape:
        raise DimMismatch(f"dims differ: {a.shape[0]} vs {b.shape[0]}")
    return complex(np.vdot(a, b))


def norm(v) -> float:
    return float(np.linalg.norm(np.asarray(v)))


def basis_vector(dim: int, k: int) -> np.ndarray:
    v = np.zeros(dim, dtype=np.complex128)
    v[k] = 1.0
    return v


def expectation(H, psi) -> float:
    psi = np.asarray(psi, dtype=np.complex128)
    return float(np.real(np.vdot(psi, H @ psi)))
