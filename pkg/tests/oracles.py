"""Independent reference computations used only by the tests."""

import math

import numpy as np


def haar_state(rng, n_qubits):
    v = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
    return v / np.linalg.norm(v)


def random_hermitian(rng, dim):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2


def random_qubit_unitary(rng):
    z = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def purity_by_partial_trace(psi, subset):
    """Tr(rho_S^2) from the full density matrix, traced qubit by qubit."""
    n = int(round(math.log2(len(psi))))
    rho = np.outer(psi, psi.conj()).reshape((2,) * (2 * n))
    # axis a <-> qubit n-1-a on both ket and bra sides
    keep = sorted(subset)
    current = [n - 1 - a for a in range(n)]
    for q in range(n):
        if q in keep:
            continue
        k = len(current)
        a = current.index(q)
        rho = np.trace(rho, axis1=a, axis2=a + k)
        current.pop(a)
    dim = 2 ** len(current)
    rho = rho.reshape(dim, dim)
    return float(np.real(np.trace(rho @ rho)))


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def brute_force_depth(psi, tol=1e-9):
    """(depth, separability) by enumerating every set partition."""
    n = int(round(math.log2(len(psi))))
    best_depth, best_blocks = n, 1
    for part in set_partitions(list(range(n))):
        if len(part) == 1:
            continue
        if all(purity_by_partial_trace(psi, b) >= 1 - tol for b in part):
            best_depth = min(best_depth, max(len(b) for b in part))
            best_blocks = max(best_blocks, len(part))
    return best_depth, best_blocks


def ghz(n):
    v = np.zeros(2**n, dtype=complex)
    v[0] = v[-1] = 1 / math.sqrt(2)
    return v


def w_state(n):
    v = np.zeros(2**n, dtype=complex)
    for q in range(n):
        v[1 << q] = 1 / math.sqrt(n)
    return v


def bell_times_zero():
    # Bell pair on qubits 0,1; qubit 2 down
    v = np.zeros(8, dtype=complex)
    v[0b000] = v[0b011] = 1 / math.sqrt(2)
    return v


def block_state(rng, n, blocks):
    """Haar-random state on each block of qubits, tensored into an n-qubit register."""
    tensor = np.ones((), dtype=complex)
    order = []
    for block in blocks:
        tensor = np.multiply.outer(tensor, haar_state(rng, len(block)).reshape((2,) * len(block)))
        # reshape puts the block's highest qubit first
        order.extend(sorted(block, reverse=True))
    # axis i of `tensor` holds qubit order[i]; the register wants axis a = qubit n-1-a
    perm = [order.index(n - 1 - a) for a in range(n)]
    return np.transpose(tensor, perm).ravel()


def random_set_partition(rng, n):
    labels = rng.integers(0, n, size=n)
    groups = {}
    for q, lab in enumerate(labels):
        groups.setdefault(int(lab), []).append(q)
    return list(groups.values())
