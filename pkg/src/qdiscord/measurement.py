"""Projective measurements on qubit B and measured conditional entropies.

A two-outcome projective measurement is parameterized by a unit 4-vector
(t0, t1, t2, t3): the unitary U = t0*I + i(t1*X + t2*Y + t3*Z) rotates the
computational basis, and the projectors are its columns' outer products.
The derived scalars

    k = t0**2 + t3**2,   l = t1**2 + t2**2,   m = (t0*t1 + t2*t3)**2

determine everything the circulant closed forms need.  The redundant
(global-phase) direction of the 4-vector is gauge: optimization happens
over the Bloch angles (theta, phi) of the outcome-0 projector axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg
from .classical import check_rank
from .errors import DimensionError

# Outcomes with probability at or below this floor are flagged
# zero-probability and carry no post-measurement state.
PROBABILITY_FLOOR = 1e-14

VARIANTS = ("qexp", "additive")


def check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return variant


@dataclass(frozen=True)
class ProjectiveMeasurement:
    """Rank-1 orthogonal projector pair on one qubit.

    Constructed from a nonzero 4-vector, which is normalized; prefer the
    ``from_bloch_angles`` constructor when only the projector axis matters.
    """

    t0: float
    t1: float
    t2: float
    t3: float

    def __post_init__(self):
        norm = float(np.sqrt(self.t0**2 + self.t1**2 + self.t2**2 + self.t3**2))
        if norm < 1e-12:
            raise ValueError("measurement 4-vector must be nonzero")
        for name in ("t0", "t1", "t2", "t3"):
            object.__setattr__(self, name, float(getattr(self, name)) / norm)

    @classmethod
    def from_bloch_angles(cls, theta: float, phi: float) -> "ProjectiveMeasurement":
        """Measurement whose outcome-0 projector points along (theta, phi)."""
        half = 0.5 * float(theta)
        return cls(
            np.cos(half),
            np.sin(half) * np.sin(phi),
            -np.sin(half) * np.cos(phi),
            0.0,
        )

    @classmethod
    def computational_basis(cls) -> "ProjectiveMeasurement":
        return cls(1.0, 0.0, 0.0, 0.0)

    @property
    def unitary(self) -> np.ndarray:
        """U = t0*I + i t.sigma; its columns are the measured basis."""
        t0, t1, t2, t3 = self.t0, self.t1, self.t2, self.t3
        return np.array(
            [
                [t0 + 1j * t3, t2 + 1j * t1],
                [-t2 + 1j * t1, t0 - 1j * t3],
            ],
            dtype=complex,
        )

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        u = self.unitary
        pi0 = np.outer(u[:, 0], u[:, 0].conj())
        pi1 = np.outer(u[:, 1], u[:, 1].conj())
        return pi0, pi1

    @property
    def k(self) -> float:
        return self.t0**2 + self.t3**2

    @property
    def l(self) -> float:
        return self.t1**2 + self.t2**2

    @property
    def m(self) -> float:
        return (self.t0 * self.t1 + self.t2 * self.t3) ** 2

    def bloch_angles(self) -> tuple[float, float]:
        """Polar and azimuthal angle of the outcome-0 projector axis."""
        pi0, _ = self.projectors()
        n3 = float((pi0[0, 0] - pi0[1, 1]).real)
        n1 = float(2.0 * pi0[1, 0].real)
        n2 = float(2.0 * pi0[1, 0].imag)
        theta = float(np.arccos(np.clip(n3, -1.0, 1.0)))
        phi = float(np.arctan2(n2, n1)) % (2.0 * np.pi)
        return theta, phi

    def swapped(self) -> "ProjectiveMeasurement":
        """The same projector pair with the outcome labels exchanged."""
        theta, phi = self.bloch_angles()
        return ProjectiveMeasurement.from_bloch_angles(
            np.pi - theta, (phi + np.pi) % (2.0 * np.pi)
        )


class MeasurementOutcome(NamedTuple):
    probability: float
    state: np.ndarray | None  # None for zero-probability outcomes


def apply_measurement(
    rho, measurement: ProjectiveMeasurement, *, check: bool = True
) -> list[MeasurementOutcome]:
    """Post-measurement ensemble of a measurement on qubit B.

    Outcome k has probability p_k = Tr[(I x Pi_k) rho] and state
    (I x Pi_k) rho (I x Pi_k) / p_k.
    """
    a = linalg.validate_state(rho) if check else np.asarray(rho, dtype=complex)
    if a.shape != (4, 4):
        raise DimensionError("apply_measurement expects a two-qubit state")
    outcomes = []
    for pi in measurement.projectors():
        e = linalg.tensor_product(linalg.IDENTITY_2, pi)
        p = float(np.trace(e @ a).real)
        if p <= PROBABILITY_FLOOR:
            outcomes.append(MeasurementOutcome(max(p, 0.0), None))
            continue
        post = (e @ a @ e) / p
        post = (post + post.conj().T) / 2.0
        outcomes.append(MeasurementOutcome(p, post))
    return outcomes


def measured_conditional_entropy(
    rho,
    measurement: ProjectiveMeasurement,
    q: float,
    variant: str = "qexp",
    *,
    check: bool = True,
) -> float:
    """Conditional Tsallis entropy of the post-measurement ensemble.

    variant "qexp" uses the escort q-expectation
    sum p_k**q T(rho_k) / sum p_k**q; "additive" uses the ordinary
    expectation sum p_k T(rho_k).  Zero-probability outcomes contribute 0,
    and with "qexp" the normalizer runs over surviving outcomes only.
    """
    from .quantum import tsallis_entropy_state

    q = check_rank(q)
    check_variant(variant)
    outcomes = apply_measurement(rho, measurement, check=check)
    terms = [
        (p, tsallis_entropy_state(state, q, check=False))
        for p, state in outcomes
        if state is not None
    ]
    if variant == "additive":
        return sum(p * t for p, t in terms)
    den = sum(p**q for p, _ in terms)
    return sum(p**q * t for p, t in terms) / den
