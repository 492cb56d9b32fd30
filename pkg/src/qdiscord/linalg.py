"""Dense complex linear algebra for one- and two-qubit operators.

Basis convention: the two-qubit computational basis is ordered
|00>, |01>, |10>, |11> with qubit A as the first (most significant)
tensor factor.  All operators are plain complex128 numpy arrays;
``validate_state`` is the gate that turns a raw matrix into a trusted
density matrix.
"""

from __future__ import annotations

import json
from typing import NamedTuple

import numpy as np

from .errors import (
    ConvergenceError,
    DimensionError,
    HermiticityError,
    NotPositiveError,
    TraceError,
)

# Validation thresholds for raw input matrices.
HERMITICITY_TOL = 1e-8
TRACE_TOL = 1e-8
PSD_TOL = 1e-8

# Spectra of validated states: eigenvalues in [-EIG_CLAMP, EIG_FLOOR) are
# numerical noise and are replaced by exact zeros before entropy use;
# anything below -EIG_CLAMP is an error, not silently fixed.  The positive
# floor matters for entropic ranks q < 1, where x**q amplifies noise-level
# eigenvalues (1e-17 ** 0.1 ~ 0.02).
EIG_CLAMP = 1e-9
EIG_FLOOR = 1e-12

_JACOBI_MAX_SWEEPS = 100

IDENTITY_2 = np.eye(2, dtype=complex)
IDENTITY_4 = np.eye(4, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# Swap of the two tensor factors: FLIP |ab> = |ba>.
FLIP = np.array(
    [
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ],
    dtype=complex,
)


class Spectrum(NamedTuple):
    """Eigenvalues in descending order, with optional orthonormal columns."""

    values: np.ndarray
    vectors: np.ndarray | None


def _as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in (2, 4):
        raise DimensionError(f"expected a 2x2 or 4x4 matrix, got shape {a.shape}")
    return a


def hermiticity_defect(m) -> float:
    """Largest absolute deviation of M from its conjugate transpose."""
    a = _as_matrix(m)
    return float(np.max(np.abs(a - a.conj().T)))


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product of two single-qubit operators (A as first factor)."""
    am = np.asarray(a, dtype=complex)
    bm = np.asarray(b, dtype=complex)
    if am.shape != (2, 2) or bm.shape != (2, 2):
        raise DimensionError(
            f"tensor_product expects two 2x2 matrices, got {am.shape} and {bm.shape}"
        )
    return np.kron(am, bm)


def partial_trace(rho, keep: str = "A", *, check: bool = True) -> np.ndarray:
    """Reduce a two-qubit state to the kept subsystem ("A" or "B").

    With ``check`` (the default) the input must pass ``validate_state``;
    internal callers that already hold a validated state skip the check.
    """
    sub = keep.upper()
    if sub not in ("A", "B"):
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    a = validate_state(rho) if check else np.asarray(rho, dtype=complex)
    if a.shape != (4, 4):
        raise DimensionError(f"partial_trace expects a 4x4 state, got {a.shape}")
    r = a.reshape(2, 2, 2, 2)
    if sub == "A":
        return np.ascontiguousarray(np.einsum("ijkj->ik", r))
    return np.ascontiguousarray(np.einsum("ijik->jk", r))


def _jacobi_rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Annihilate a[p, q] with a complex Jacobi rotation, in place."""
    apq = a[p, q]
    r = abs(apq)
    phase = apq / r
    # Phase-rotate so the pivot block is real symmetric, then apply the
    # classical 2x2 rotation that zeroes the off-diagonal entry.
    tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
    # Smaller root of t^2 - 2*tau*t - 1 = 0 keeps the rotation angle <= pi/4.
    if tau >= 0.0:
        t = -1.0 / (tau + np.sqrt(1.0 + tau * tau))
    else:
        t = 1.0 / (-tau + np.sqrt(1.0 + tau * tau))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    jpp = phase * c
    jpq = -phase * s
    # A <- J^dagger A J applied to columns then rows of the pivot pair.
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = col_p * jpp + col_q * s
    a[:, q] = col_p * jpq + col_q * c
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = row_p * np.conj(jpp) + row_q * s
    a[q, :] = row_p * np.conj(jpq) + row_q * c
    a[p, q] = 0.0
    a[q, p] = 0.0
    col_p = v[:, p].copy()
    col_q = v[:, q].copy()
    v[:, p] = col_p * jpp + col_q * s
    v[:, q] = col_p * jpq + col_q * c


def _jacobi_hermitian(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalization of a Hermitian matrix (dim <= 4)."""
    a = np.array(m, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(np.diag(a).real))))
    tol = 1e-15 * scale
    for _ in range(_JACOBI_MAX_SWEEPS):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off = max(off, abs(a[p, q]))
        if off <= tol:
            return np.diag(a).real.copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > tol:
                    _jacobi_rotate(a, v, p, q)
    raise ConvergenceError(
        f"Jacobi eigensolver did not converge in {_JACOBI_MAX_SWEEPS} sweeps"
    )


def eigendecompose_hermitian(m, *, with_vectors: bool = True) -> Spectrum:
    """Eigenvalues (descending) and optionally eigenvectors of a Hermitian matrix.

    Uses a cyclic Jacobi rotation scheme; for the 2x2 and 4x4 matrices
    handled here it converges in a handful of sweeps.
    """
    a = _as_matrix(m)
    defect = float(np.max(np.abs(a - a.conj().T)))
    if defect > HERMITICITY_TOL:
        raise HermiticityError(
            f"matrix is not Hermitian (max deviation {defect:.3e})"
        )
    values, vectors = _jacobi_hermitian((a + a.conj().T) / 2.0)
    order = np.argsort(-values, kind="stable")
    values = values[order]
    if not with_vectors:
        return Spectrum(values, None)
    return Spectrum(values, vectors[:, order])


def eigvals_hermitian(m) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, descending."""
    return eigendecompose_hermitian(m, with_vectors=False).values


def clamp_spectrum(values, *, clamp: float = EIG_CLAMP, floor: float = EIG_FLOOR) -> np.ndarray:
    """Zero out noise-level eigenvalues of a density-matrix spectrum.

    Values in [-clamp, floor) become exactly 0; values below -clamp raise,
    since that indicates an invalid state rather than rounding noise.
    """
    v = np.asarray(values, dtype=float)
    low = float(v.min()) if v.size else 0.0
    if low < -clamp:
        raise NotPositiveError(
            f"eigenvalue {low:.3e} is negative beyond the clamp window {-clamp:.1e}"
        )
    return np.where(v < floor, 0.0, v)


def validate_state(m) -> np.ndarray:
    """Check a raw matrix against the density-matrix contract and clean it.

    Raises HermiticityError, TraceError or NotPositiveError.  On success
    returns the Hermitian part normalized to unit trace, so downstream
    code can rely on exact symmetry.
    """
    a = _as_matrix(m)
    defect = float(np.max(np.abs(a - a.conj().T)))
    if defect > HERMITICITY_TOL:
        raise HermiticityError(
            f"state is not Hermitian (max deviation {defect:.3e})"
        )
    tr = complex(np.trace(a))
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceError(f"state trace is {tr:.12g}, expected 1")
    h = (a + a.conj().T) / 2.0
    h /= np.trace(h).real
    eigs, _ = _jacobi_hermitian(h)
    low = float(eigs.min())
    if low < -PSD_TOL:
        raise NotPositiveError(
            f"state has eigenvalue {low:.3e}; not positive semidefinite"
        )
    return h


def state_from_dict(payload: dict) -> np.ndarray:
    """Build a raw complex matrix from {"dim": n, "re": [[..]], "im": [[..]]}.

    The "im" part may be omitted for real matrices.  The result is not
    validated; pass it through ``validate_state``.
    """
    try:
        dim = int(payload["dim"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DimensionError(f"state file lacks a usable 'dim' field: {exc}") from exc
    if dim not in (2, 4):
        raise DimensionError(f"state dim must be 2 or 4, got {dim}")
    if "re" not in payload:
        raise DimensionError("state file lacks the 're' field")
    re = np.asarray(payload["re"], dtype=float)
    im_raw = payload.get("im")
    im = np.zeros((dim, dim)) if im_raw is None else np.asarray(im_raw, dtype=float)
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise DimensionError(
            f"'re'/'im' must be {dim}x{dim}, got {re.shape} and {im.shape}"
        )
    return re + 1j * im


def load_state(path) -> np.ndarray:
    """Read a JSON state file and return the validated density matrix."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DimensionError(f"state file is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise DimensionError("state file must contain a JSON object")
    return validate_state(state_from_dict(payload))
