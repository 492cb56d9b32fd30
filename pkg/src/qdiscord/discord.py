"""Classical correlations and q-discord via measurement optimization.

The classical correlation of a two-qubit state at rank q is

    C = T(A) - inf over projective measurements on B of the measured
        conditional entropy,

and the q-discord is the matching mutual entropy minus C.  Since T(A)
does not depend on the measurement, only the conditional entropy is
optimized: a deterministic coarse scan over the Bloch angles of the
projector axis, followed by Nelder-Mead simplex refinement seeded from
the best three grid points.  Everything is pure and deterministic for a
fixed OptimizerConfig, so sweep drivers may run many optimizations
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import backend, linalg
from .classical import check_rank
from .measurement import ProjectiveMeasurement, check_variant
from .quantum import quantum_mutual, tsallis_entropy_state, von_neumann_entropy


@dataclass(frozen=True)
class OptimizerConfig:
    """Knobs of the measurement search; defaults favor accuracy.

    The coarse scan evaluates theta_points x phi_points angles; the
    simplex refinement stops when the spread of its three values drops
    below value_tolerance or after max_iterations steps.
    """

    theta_points: int = 64
    phi_points: int = 128
    max_iterations: int = 500
    value_tolerance: float = 1e-10


DEFAULT_CONFIG = OptimizerConfig()


class OptimizationOutcome(NamedTuple):
    value: float
    measurement: ProjectiveMeasurement
    converged: bool
    evaluations: int


@dataclass(frozen=True)
class DiscordResult:
    """Discord value with its decomposition and the achieving measurement."""

    value: float
    mutual_part: float
    classical_part: float
    optimal_measurement: ProjectiveMeasurement
    evaluations: int
    converged: bool
    q: float
    variant: str


def _canonical_angles(theta: float, phi: float) -> tuple[float, float]:
    """Fold arbitrary angles onto theta in [0, pi], phi in [0, 2pi)."""
    st = math.sin(theta)
    n1 = st * math.cos(phi)
    n2 = st * math.sin(phi)
    n3 = math.cos(theta)
    theta_c = math.acos(max(-1.0, min(1.0, n3)))
    phi_c = math.atan2(n2, n1) % (2.0 * math.pi)
    return theta_c, phi_c


def _nelder_mead(
    fun: Callable[[np.ndarray], float],
    points: list[np.ndarray],
    values: list[float],
    config: OptimizerConfig,
) -> tuple[np.ndarray, float, bool, int]:
    """Minimize a 2-D function from a starting simplex; deterministic."""
    sim = [np.asarray(p, dtype=float) for p in points]
    fs = list(values)
    evals = 0
    converged = False
    for _ in range(config.max_iterations):
        order = sorted(range(3), key=lambda i: (fs[i], i))
        sim = [sim[i] for i in order]
        fs = [fs[i] for i in order]
        if fs[2] - fs[0] < config.value_tolerance:
            converged = True
            break
        centroid = 0.5 * (sim[0] + sim[1])
        reflected = centroid + (centroid - sim[2])
        f_r = fun(reflected)
        evals += 1
        if f_r < fs[0]:
            expanded = centroid + 2.0 * (reflected - centroid)
            f_e = fun(expanded)
            evals += 1
            if f_e < f_r:
                sim[2], fs[2] = expanded, f_e
            else:
                sim[2], fs[2] = reflected, f_r
        elif f_r < fs[1]:
            sim[2], fs[2] = reflected, f_r
        else:
            if f_r < fs[2]:
                contracted = centroid + 0.5 * (reflected - centroid)
            else:
                contracted = centroid - 0.5 * (centroid - sim[2])
            f_c = fun(contracted)
            evals += 1
            if f_c < min(f_r, fs[2]):
                sim[2], fs[2] = contracted, f_c
            else:
                for i in (1, 2):
                    sim[i] = sim[0] + 0.5 * (sim[i] - sim[0])
                    fs[i] = fun(sim[i])
                    evals += 1
    best = min(range(3), key=lambda i: (fs[i], i))
    return sim[best], fs[best], converged, evals


def _minimize_conditional_entropy(
    rho: np.ndarray, q: float, escort: bool, config: OptimizerConfig
) -> tuple[float, float, float, bool, int]:
    """Return (min value, theta, phi, converged, evaluations)."""
    rho_c = np.ascontiguousarray(rho, dtype=complex)
    thetas = np.linspace(0.0, np.pi, config.theta_points)
    phis = np.linspace(0.0, 2.0 * np.pi, config.phi_points, endpoint=False)
    grid = backend.cond_entropy_grid(rho_c, thetas, phis, q, escort)
    evals = grid.size
    flat_order = np.argsort(grid, axis=None, kind="stable")
    n_phi = grid.shape[1]

    points = []
    values = []
    for idx in flat_order[:3]:
        i, j = divmod(int(idx), n_phi)
        points.append(np.array([thetas[i], phis[j]]))
        values.append(float(grid[i, j]))
    # The best three grid points make a poor simplex when they are
    # collinear or carry (near-)identical values, which happens routinely
    # on symmetric landscapes: the relabeling symmetry (theta, phi) ->
    # (pi - theta, phi + pi) duplicates grid values exactly.  In either
    # case rebuild the simplex locally around the best point with
    # half-grid-step offsets; on genuinely flat landscapes the refinement
    # then terminates immediately, which is correct.
    area = abs(
        (points[1][0] - points[0][0]) * (points[2][1] - points[0][1])
        - (points[1][1] - points[0][1]) * (points[2][0] - points[0][0])
    )
    fun = lambda x: backend.cond_entropy_angles(rho_c, x[0], x[1], q, escort)
    if area < 1e-9 or values[2] - values[0] < config.value_tolerance:
        d_theta = 0.5 * (thetas[1] - thetas[0]) if len(thetas) > 1 else 0.02
        d_phi = 0.5 * (phis[1] - phis[0]) if len(phis) > 1 else 0.02
        points = [
            points[0],
            points[0] + np.array([d_theta, 0.0]),
            points[0] + np.array([0.0, d_phi]),
        ]
        values = [values[0], fun(points[1]), fun(points[2])]
        evals += 2

    x, f, converged, nm_evals = _nelder_mead(fun, points, values, config)
    evals += nm_evals

    best_grid = float(grid.flat[flat_order[0]])
    if best_grid < f:
        i, j = divmod(int(flat_order[0]), n_phi)
        x = np.array([thetas[i], phis[j]])
        f = best_grid
    theta, phi = _canonical_angles(float(x[0]), float(x[1]))
    return f, theta, phi, converged, evals


def classical_correlations(
    rho, q: float, variant: str = "qexp", config: OptimizerConfig | None = None
) -> OptimizationOutcome:
    """Maximal information gain about A from a projective measurement on B.

    Returns the supremum of T(A) minus the measured conditional entropy
    (escort-weighted for "qexp", plain expectation for "additive") along
    with the measurement that achieves the reported value.
    """
    q = check_rank(q)
    check_variant(variant)
    cfg = config or DEFAULT_CONFIG
    a = linalg.validate_state(rho)
    t_a = tsallis_entropy_state(linalg.partial_trace(a, "A", check=False), q, check=False)
    low, theta, phi, converged, evals = _minimize_conditional_entropy(
        a, q, variant == "qexp", cfg
    )
    pm = ProjectiveMeasurement.from_bloch_angles(theta, phi)
    return OptimizationOutcome(t_a - low, pm, converged, evals)


def q_discord(
    rho, q: float, variant: str = "qexp", config: OptimizerConfig | None = None
) -> DiscordResult:
    """q-discord of a two-qubit state: mutual entropy minus classical part.

    variant "qexp" pairs the normalized mutual entropy with the escort
    conditional entropy; "additive" pairs the plain-sum mutual entropy
    with the ordinary expectation.
    """
    q = check_rank(q)
    check_variant(variant)
    a = linalg.validate_state(rho)
    mutual = quantum_mutual(a, q)
    mutual_part = mutual.qexp if variant == "qexp" else mutual.additive
    cc = classical_correlations(a, q, variant, config)
    return DiscordResult(
        value=mutual_part - cc.value,
        mutual_part=mutual_part,
        classical_part=cc.value,
        optimal_measurement=cc.measurement,
        evaluations=cc.evaluations,
        converged=cc.converged,
        q=q,
        variant=variant,
    )


def von_neumann_discord(rho, config: OptimizerConfig | None = None) -> DiscordResult:
    """Standard quantum discord (von Neumann entropies, plain expectation).

    Baseline for the q -> 1 limit of both q-discord variants.
    """
    cfg = config or DEFAULT_CONFIG
    a = linalg.validate_state(rho)
    h_a = von_neumann_entropy(linalg.partial_trace(a, "A", check=False), check=False)
    h_b = von_neumann_entropy(linalg.partial_trace(a, "B", check=False), check=False)
    h_ab = von_neumann_entropy(a, check=False)
    mutual_part = h_a + h_b - h_ab
    low, theta, phi, converged, evals = _minimize_conditional_entropy(a, 1.0, False, cfg)
    classical_part = h_a - low
    pm = ProjectiveMeasurement.from_bloch_angles(theta, phi)
    return DiscordResult(
        value=mutual_part - classical_part,
        mutual_part=mutual_part,
        classical_part=classical_part,
        optimal_measurement=pm,
        evaluations=evals,
        converged=converged,
        q=1.0,
        variant="von_neumann",
    )
