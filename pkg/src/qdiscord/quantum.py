"""Tsallis and von Neumann entropies of density matrices.

Powers of a state are always evaluated through its eigenvalues (never via
matrix powers): the spectrum is clamped by ``linalg.clamp_spectrum`` and
then summed with the 0**q = 0 convention, which keeps non-integer ranks
exact on rank-deficient states.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .classical import check_rank
from .errors import DegenerateNormalizerError, DimensionError

_NORMALIZER_TOL = 1e-12


@dataclass(frozen=True)
class QuantumMutual:
    """Both mutual-entropy variants of a two-qubit state at rank q.

    ``additive`` is T(A) + T(B) - T(AB); ``qexp`` is the normalized form
    (T(A) + T(B) - T(AB) + (1-q) T(A) T(B)) / (1 + (1-q) T(B)).
    """

    additive: float
    qexp: float
    q: float


def _entropy_from_spectrum(values: np.ndarray, q: float) -> float:
    v = linalg.clamp_spectrum(values)
    mask = v > 0.0
    return (1.0 - float(np.sum(v[mask] ** q))) / (q - 1.0)


def tsallis_entropy_state(rho, q: float, *, check: bool = True) -> float:
    """(1 - Tr rho**q) / (q - 1), computed from the clamped spectrum."""
    q = check_rank(q)
    a = linalg.validate_state(rho) if check else np.asarray(rho, dtype=complex)
    return _entropy_from_spectrum(linalg.eigvals_hermitian(a), q)


def von_neumann_entropy(rho, *, check: bool = True) -> float:
    """-Tr(rho log rho) in nats."""
    a = linalg.validate_state(rho) if check else np.asarray(rho, dtype=complex)
    v = linalg.clamp_spectrum(linalg.eigvals_hermitian(a))
    mask = v > 0.0
    return float(-np.sum(v[mask] * np.log(v[mask])))


def quantum_mutual(rho, q: float) -> QuantumMutual:
    """Both mutual-entropy variants for a validated two-qubit state."""
    q = check_rank(q)
    a = linalg.validate_state(rho)
    if a.shape != (4, 4):
        raise DimensionError("quantum_mutual expects a two-qubit state")
    ta = tsallis_entropy_state(linalg.partial_trace(a, "A", check=False), q, check=False)
    tb = tsallis_entropy_state(linalg.partial_trace(a, "B", check=False), q, check=False)
    tab = tsallis_entropy_state(a, q, check=False)
    additive = ta + tb - tab
    den = 1.0 + (1.0 - q) * tb
    if abs(den) <= _NORMALIZER_TOL:
        raise DegenerateNormalizerError(
            "normalizer 1 + (1-q) T(B) vanished in mutual entropy"
        )
    qexp = (additive + (1.0 - q) * ta * tb) / den
    return QuantumMutual(additive=additive, qexp=qexp, q=q)


def pseudo_additivity_defect(a, b, q: float) -> float:
    """T(a x b) - [T(a) + T(b) + (1-q) T(a) T(b)]; zero up to rounding."""
    q = check_rank(q)
    am = linalg.validate_state(a)
    bm = linalg.validate_state(b)
    joint = linalg.tensor_product(am, bm)
    t_joint = tsallis_entropy_state(joint, q, check=False)
    t_a = tsallis_entropy_state(am, q, check=False)
    t_b = tsallis_entropy_state(bm, q, check=False)
    return t_joint - (t_a + t_b + (1.0 - q) * t_a * t_b)
