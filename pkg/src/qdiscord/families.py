"""State families with analytic correlation measures.

Three two-qubit families are provided, each with a constructor and the
closed-form entropies, mutual entropies, classical correlations and
q-discords that the numerical pipeline is validated against:

* Werner states      rho_W(lam)  = [(2-lam) I + (2 lam - 1) FLIP] / 6,
* isotropic states   rho_iso(lam) = lam P+ + (1-lam)/3 (I - P+),
* circulant states   rho_{eps,g}, an X-shaped family on (0,1] x [0,1].

Werner and isotropic conditional entropies are measurement-independent,
so their classical correlations need no optimization.  For the circulant
family the closed-form classical correlation assumes the infimum of the
escort conditional entropy sits at the balanced equatorial measurement
(k = l = 1/2, m = 0, the largest post-measurement asymmetry); the
numerical optimizer confirms this for ranks q >= 1 and refutes it for
q < 1, where strictly better measurements exist (see README).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .classical import check_rank
from .errors import FormulaDomainError

_RADICAND_TOL = 1e-12

# Candidate measurements of the circulant case analysis, in the
# tie-breaking order used by ``circulant_closed_forms``.
INFIMUM_CASES = ("equatorial_m0", "equatorial_m14", "axial")


def _check_unit_interval(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")
    return value


def make_werner(lam: float) -> np.ndarray:
    """Werner state: mixture of identity and the flip operator."""
    lam = _check_unit_interval("lambda", lam)
    return linalg.validate_state(
        ((2.0 - lam) * linalg.IDENTITY_4 + (2.0 * lam - 1.0) * linalg.FLIP) / 6.0
    )


BELL_PHI_PLUS = np.zeros(4, dtype=complex)
BELL_PHI_PLUS[0] = BELL_PHI_PLUS[3] = 1.0 / np.sqrt(2.0)


def make_isotropic(lam: float) -> np.ndarray:
    """Isotropic state: Bell projector mixed with white noise."""
    lam = _check_unit_interval("lambda", lam)
    bell = np.outer(BELL_PHI_PLUS, BELL_PHI_PLUS.conj())
    return linalg.validate_state(
        lam * bell + (1.0 - lam) / 3.0 * (linalg.IDENTITY_4 - bell)
    )


def make_circulant(epsilon: float, g: float) -> np.ndarray:
    """Circulant X-shaped state on epsilon in (0, 1], g in [0, 1].

    epsilon = 0 is excluded because the family involves 1/epsilon.
    """
    epsilon = float(epsilon)
    if not 0.0 < epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon}")
    g = _check_unit_interval("g", g)
    n = 2.0 + epsilon + 1.0 / epsilon
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[3, 3] = m[0, 3] = m[3, 0] = 1.0
    m[1, 1] = epsilon
    m[2, 2] = 1.0 / epsilon
    m[1, 2] = m[2, 1] = g
    return linalg.validate_state(m / n)


def binary_tsallis(x: float, q: float) -> float:
    """Tsallis entropy of the two-outcome spectrum {(1+x)/2, (1-x)/2}.

    Decreasing in x on [0, 1] for every q > 0; x is the asymmetry of a
    post-measurement qubit spectrum.
    """
    q = check_rank(q)
    hi = max(0.0, min(1.0, 0.5 * (1.0 + x)))
    lo = max(0.0, min(1.0, 0.5 * (1.0 - x)))
    acc = (hi**q if hi > 0.0 else 0.0) + (lo**q if lo > 0.0 else 0.0)
    return (1.0 - acc) / (q - 1.0)


@dataclass(frozen=True)
class FamilyForms:
    """Closed-form record shared by the Werner and isotropic families."""

    subsystem_entropy: float  # T(A) = T(B)
    joint_entropy: float  # T(AB)
    classical: float  # C, equal for both weighting variants here
    mutual_additive: float
    mutual_qexp: float
    discord_additive: float
    discord_qexp: float


def werner_closed_forms(lam: float, q: float) -> FamilyForms:
    lam = _check_unit_interval("lambda", lam)
    q = check_rank(q)
    inv = 1.0 / (q - 1.0)
    t_a = inv * (1.0 - 2.0 ** (1.0 - q))
    t_ab = inv * (
        1.0 - 3.0 * ((1.0 + lam) / 6.0) ** q - ((1.0 - lam) / 2.0) ** q
    )
    classical = inv * (
        ((2.0 - lam) / 3.0) ** q + ((1.0 + lam) / 3.0) ** q - 2.0 ** (1.0 - q)
    )
    mutual_additive = 2.0 * t_a - t_ab
    mutual_qexp = inv * (
        0.5 * (1.0 - lam) ** q + 1.5 * ((1.0 + lam) / 3.0) ** q - 2.0 ** (1.0 - q)
    )
    return FamilyForms(
        subsystem_entropy=t_a,
        joint_entropy=t_ab,
        classical=classical,
        mutual_additive=mutual_additive,
        mutual_qexp=mutual_qexp,
        discord_additive=mutual_additive - classical,
        discord_qexp=mutual_qexp - classical,
    )


def isotropic_closed_forms(lam: float, q: float) -> FamilyForms:
    lam = _check_unit_interval("lambda", lam)
    q = check_rank(q)
    inv = 1.0 / (q - 1.0)
    t_a = inv * (1.0 - 2.0 ** (1.0 - q))
    t_ab = inv * (1.0 - lam**q - 3.0 * ((1.0 - lam) / 3.0) ** q)
    classical = inv * (
        ((2.0 - 2.0 * lam) / 3.0) ** q
        + ((1.0 + 2.0 * lam) / 3.0) ** q
        - 2.0 ** (1.0 - q)
    )
    mutual_additive = 2.0 * t_a - t_ab
    mutual_qexp = inv * (
        0.5 * (2.0 * lam) ** q
        + 1.5 * ((2.0 - 2.0 * lam) / 3.0) ** q
        - 2.0 ** (1.0 - q)
    )
    return FamilyForms(
        subsystem_entropy=t_a,
        joint_entropy=t_ab,
        classical=classical,
        mutual_additive=mutual_additive,
        mutual_qexp=mutual_qexp,
        discord_additive=mutual_additive - classical,
        discord_qexp=mutual_qexp - classical,
    )


@dataclass(frozen=True)
class CirculantAnalytics:
    """Spectral data of a circulant state and of its measured ensembles.

    ``eigenvalues`` is (0, lam_sym, lam_plus, lam_minus) of the 4x4 state;
    ``reduced_spectrum`` is the shared marginal spectrum (mu1, mu2);
    ``theta``/``theta_prime`` are the post-measurement spectral asymmetries
    for a measurement with weights (k, l, m), to be fed to
    ``binary_tsallis``.
    """

    eigenvalues: tuple[float, float, float, float]
    reduced_spectrum: tuple[float, float]
    theta: float
    theta_prime: float


def _guarded_sqrt(radicand: float, context: str) -> float:
    if radicand < -_RADICAND_TOL:
        raise FormulaDomainError(f"negative radicand {radicand:.3e} in {context}")
    return float(np.sqrt(max(radicand, 0.0)))


def circulant_analytics(
    epsilon: float, g: float, k: float, l: float, m: float
) -> CirculantAnalytics:
    """Closed-form spectra for a circulant state and measurement weights."""
    epsilon = float(epsilon)
    if not 0.0 < epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon}")
    g = _check_unit_interval("g", g)
    if abs(k + l - 1.0) > 1e-9:
        raise ValueError(f"measurement weights must satisfy k + l = 1, got {k + l}")
    if not -1e-12 <= m <= 0.25 + 1e-12:
        raise ValueError(f"measurement weight m must lie in [0, 1/4], got {m}")
    inv_eps = 1.0 / epsilon
    lam_sym = 2.0 * epsilon / (1.0 + epsilon) ** 2
    root = _guarded_sqrt(
        epsilon**4 + 2.0 * (2.0 * g**2 - 1.0) * epsilon**2 + 1.0,
        "circulant eigenvalues",
    )
    lam_plus = (1.0 + epsilon**2 + root) / (2.0 * (1.0 + epsilon) ** 2)
    lam_minus = (1.0 + epsilon**2 - root) / (2.0 * (1.0 + epsilon) ** 2)
    n = 2.0 + epsilon + inv_eps
    mu1 = (1.0 + epsilon) / n
    mu2 = (1.0 + inv_eps) / n
    shared = 4.0 * k * l * (1.0 + g) ** 2 - 16.0 * m * g
    theta = _guarded_sqrt(
        ((1.0 - inv_eps) * k + (epsilon - 1.0) * l) ** 2 + shared,
        "post-measurement asymmetry",
    ) / ((1.0 + inv_eps) * k + (epsilon + 1.0) * l)
    theta_prime = _guarded_sqrt(
        ((1.0 - inv_eps) * l + (epsilon - 1.0) * k) ** 2 + shared,
        "post-measurement asymmetry",
    ) / ((1.0 + inv_eps) * l + (epsilon + 1.0) * k)
    return CirculantAnalytics(
        eigenvalues=(0.0, lam_sym, lam_plus, lam_minus),
        reduced_spectrum=(mu1, mu2),
        theta=min(theta, 1.0),
        theta_prime=min(theta_prime, 1.0),
    )


@dataclass(frozen=True)
class CirculantForms:
    """Closed-form record for the circulant family (escort variant only)."""

    mutual_qexp: float
    classical_qexp: float
    discord_qexp: float
    infimum_case: str  # which candidate measurement minimized the entropy


def circulant_closed_forms(epsilon: float, g: float, q: float) -> CirculantForms:
    """Analytic mutual entropy, classical correlation and discord.

    The classical part takes the conditional-entropy infimum at the
    balanced equatorial measurement; ``infimum_case`` records which of
    the three candidate measurements actually minimized the entropy (a
    cross-check: it is always the equatorial m = 0 candidate, since the
    post-measurement entropy decreases with the asymmetry).
    """
    epsilon = float(epsilon)
    if not 0.0 < epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon}")
    g = _check_unit_interval("g", g)
    q = check_rank(q)
    inv_eps = 1.0 / epsilon
    n = 2.0 + epsilon + inv_eps
    root = _guarded_sqrt(
        epsilon**4 + 2.0 * (2.0 * g**2 - 1.0) * epsilon**2 + 1.0,
        "circulant eigenvalues",
    )
    upper = 0.5 * (1.0 + epsilon**2) + 0.5 * root
    lower = max(0.5 * (1.0 + epsilon**2) - 0.5 * root, 0.0)
    numerator = (
        epsilon**q * (2.0**q - epsilon**q - 2.0) - 1.0 + upper**q + lower**q
    )
    mutual = numerator / ((q - 1.0) * (1.0 + epsilon**q) * (1.0 + epsilon) ** q)

    mu1 = (1.0 + epsilon) / n
    mu2 = (1.0 + inv_eps) / n
    t_a = (1.0 - mu1**q - mu2**q) / (q - 1.0)

    asym_equatorial_m0 = _guarded_sqrt(
        (epsilon - inv_eps) ** 2 + 4.0 * (1.0 + g) ** 2, "equatorial asymmetry"
    ) / n
    asym_equatorial_m14 = _guarded_sqrt(
        (epsilon - inv_eps) ** 2 + 4.0 * (1.0 - g) ** 2, "equatorial asymmetry"
    ) / n
    asym_axial = abs(epsilon - 1.0) / (epsilon + 1.0)
    candidates = (
        min(asym_equatorial_m0, 1.0),
        min(asym_equatorial_m14, 1.0),
        asym_axial,
    )
    entropies = [binary_tsallis(x, q) for x in candidates]
    case = INFIMUM_CASES[int(np.argmin(entropies))]
    classical = t_a - entropies[0]
    return CirculantForms(
        mutual_qexp=mutual,
        classical_qexp=classical,
        discord_qexp=mutual - classical,
        infimum_case=case,
    )


def lemma1_gap(x: float, y: float, q: float) -> float:
    """x**q + y**q - 2 ((x+y)/2)**q for x, y >= 0.

    Nonnegative for q >= 1 and nonpositive for 0 < q < 1 (the two-point
    power-sum inequality behind the Werner/isotropic nonnegativity
    argument).  Any q > 0 is accepted; the gap vanishes identically at
    q = 1.
    """
    x = float(x)
    y = float(y)
    q = float(q)
    if x < 0.0 or y < 0.0:
        raise ValueError("lemma1_gap requires nonnegative arguments")
    if not q > 0.0:
        raise ValueError(f"power must be positive, got {q}")
    half = 0.5 * (x + y)
    acc = (x**q if x > 0.0 else 0.0) + (y**q if y > 0.0 else 0.0)
    return acc - 2.0 * (half**q if half > 0.0 else 0.0)


def werner_nonnegativity_witness(lam: float, q: float) -> float:
    """Two-term power sum minus 2 whose sign tracks the Werner discord sign.

    The two ratios 3(1-lam)/(2-lam) and (1+lam)/(2-lam) always sum to 2,
    so the gap is >= 0 for q >= 1 and <= 0 for q < 1; the escort-variant
    Werner discord has the same sign as (q - 1) times nothing stronger,
    hence is nonnegative for every q > 0.
    """
    lam = _check_unit_interval("lambda", lam)
    q = float(q)
    if not q > 0.0:
        raise ValueError(f"power must be positive, got {q}")
    first = 3.0 * (1.0 - lam) / (2.0 - lam)
    second = (1.0 + lam) / (2.0 - lam)
    acc = (first**q if first > 0.0 else 0.0) + (second**q if second > 0.0 else 0.0)
    return acc - 2.0
