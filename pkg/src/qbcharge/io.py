"""State files and deterministic JSON / CSV output."""

from __future__ import annotations

import csv
import io
import json
import math

import numpy as np


def format_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def dumps(obj, indent: int = 2) -> str:
    """JSON text with every float written to 17 significant digits."""
    return _encode(obj, indent, 0) + "\n"


def _encode(obj, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        items = [pad + _encode(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def rows_to_csv(header, records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for rec in records:
        writer.writerow([format_float(v) if isinstance(v, float) else v for v in rec])
    return buf.getvalue()


def state_to_dict(psi) -> dict:
    psi = np.asarray(psi, dtype=np.complex128).ravel()
    n = int(round(math.log2(psi.shape[0])))
    if 2**n != psi.shape[0]:
        raise ValueError(f"length {psi.shape[0]} is not a power of two")
    return {"n_qubits": n, "amplitudes": [[float(a.real), float(a.imag)] for a in psi]}


def state_from_dict(data: dict, norm_tol: float = 1e-10) -> np.ndarray:
    n = int(data["n_qubits"])
    amps = np.asarray(data["amplitudes"], dtype=float)
    if amps.shape != (2**n, 2):
        raise ValueError(f"expected {2**n} [re, im] pairs, got shape {amps.shape}")
    psi = amps[:, 0] + 1j * amps[:, 1]
    if abs(np.linalg.norm(psi) - 1) > norm_tol:
        raise ValueError("state in file is not normalized")
    return psi


def save_state(path, psi) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(state_to_dict(psi)))


def load_state(path) -> np.ndarray:
    with open(path) as fh:
        return state_from_dict(json.load(fh))
