"""Shannon and Tsallis information measures over finite distributions.

All entropies are in nats.  Joint distributions are 2-D arrays with rows
indexed by outcomes of A and columns by outcomes of B; conditioning is
always on B.  The convention 0*log(0) = 0 (and 0**q = 0) applies
throughout, and columns of zero marginal probability contribute nothing
to conditional entropies.

Three inequivalent conditional Tsallis entropies are provided:

* ``conditional_tsallis_naive``     -- plain expectation over B outcomes,
* ``conditional_tsallis_modified``  -- weights (p_j)**q, which restores the
  chain rule T(A|B) = T(AB) - T(B) exactly,
* ``conditional_tsallis_qexp``      -- escort-weighted q-expectation, which
  instead satisfies T(A|B) = (T(AB) - T(B)) / (1 + (1-q) T(B)).
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateNormalizerError

# Tsallis operations reject ranks this close to 1; the q -> 1 limit is the
# Shannon entropy and is exercised by explicit limit tests, not by silent
# dispatch that would hide precision loss near q = 1.
Q_ONE_WINDOW = 1e-6

DIST_TOL = 1e-10
_NORMALIZER_TOL = 1e-12


def check_rank(q: float) -> float:
    """Validate an entropic rank for Tsallis-specific operations."""
    q = float(q)
    if not np.isfinite(q) or q <= 0.0:
        raise ValueError(f"entropic rank must be positive, got {q}")
    if abs(q - 1.0) < Q_ONE_WINDOW:
        raise ValueError(
            f"entropic rank {q} is within {Q_ONE_WINDOW} of 1; "
            "use the Shannon/von Neumann operations for the q = 1 case"
        )
    return q


def as_distribution(p) -> np.ndarray:
    """Validate a probability vector: nonnegative entries summing to 1."""
    a = np.asarray(p, dtype=float)
    if a.ndim != 1 or a.size == 0:
        raise ValueError(f"expected a 1-D probability vector, got shape {a.shape}")
    if np.min(a) < 0.0:
        raise ValueError(f"probabilities must be nonnegative, min is {np.min(a)}")
    total = float(np.sum(a))
    if abs(total - 1.0) > DIST_TOL:
        raise ValueError(f"probabilities sum to {total:.12g}, expected 1")
    return a


def as_joint(p) -> np.ndarray:
    """Validate a joint probability table (rows: A outcomes, columns: B)."""
    a = np.asarray(p, dtype=float)
    if a.ndim != 2 or a.size == 0:
        raise ValueError(f"expected a 2-D joint table, got shape {a.shape}")
    if np.min(a) < 0.0:
        raise ValueError(f"probabilities must be nonnegative, min is {np.min(a)}")
    total = float(np.sum(a))
    if abs(total - 1.0) > DIST_TOL:
        raise ValueError(f"joint probabilities sum to {total:.12g}, expected 1")
    return a


def marginal_a(joint) -> np.ndarray:
    return np.sum(as_joint(joint), axis=1)


def marginal_b(joint) -> np.ndarray:
    return np.sum(as_joint(joint), axis=0)


def q_logarithm(x: float, q: float) -> float:
    """Deformed logarithm (x**(1-q) - 1) / (1 - q) for x > 0."""
    q = check_rank(q)
    x = float(x)
    if x <= 0.0:
        raise ValueError(f"q_logarithm requires x > 0, got {x}")
    return (x ** (1.0 - q) - 1.0) / (1.0 - q)


def _power_sum(p: np.ndarray, q: float) -> float:
    mask = p > 0.0
    return float(np.sum(p[mask] ** q))


def shannon_entropy(p) -> float:
    """-sum p log p in nats."""
    a = as_distribution(p)
    mask = a > 0.0
    return float(-np.sum(a[mask] * np.log(a[mask])))


def tsallis_entropy(p, q: float) -> float:
    """(1 - sum p**q) / (q - 1)."""
    a = as_distribution(p)
    q = check_rank(q)
    return (1.0 - _power_sum(a, q)) / (q - 1.0)


def escort_distribution(p, q: float) -> np.ndarray:
    """Renormalized power distribution r_i = p_i**q / sum_j p_j**q."""
    a = as_distribution(p)
    q = check_rank(q)
    powered = np.where(a > 0.0, a, 1.0) ** q
    powered = np.where(a > 0.0, powered, 0.0)
    total = float(np.sum(powered))
    if total <= _NORMALIZER_TOL:
        raise DegenerateNormalizerError("escort normalizer sum(p**q) vanished")
    return powered / total


def _column_entropies(joint: np.ndarray, q: float | None):
    """Yield (marginal prob, entropy of conditional column) for nonzero columns."""
    pb = np.sum(joint, axis=0)
    for j in range(joint.shape[1]):
        if pb[j] <= 0.0:
            continue
        cond = joint[:, j] / pb[j]
        mask = cond > 0.0
        if q is None:
            ent = float(-np.sum(cond[mask] * np.log(cond[mask])))
        else:
            ent = (1.0 - float(np.sum(cond[mask] ** q))) / (q - 1.0)
        yield float(pb[j]), ent


def conditional_tsallis_naive(joint, q: float) -> float:
    """Plain expectation of per-column Tsallis entropies over B's marginal."""
    a = as_joint(joint)
    q = check_rank(q)
    return sum(pb * ent for pb, ent in _column_entropies(a, q))


def conditional_tsallis_modified(joint, q: float) -> float:
    """Expectation with modified weights (p_j)**q; equals T(AB) - T(B)."""
    a = as_joint(joint)
    q = check_rank(q)
    return sum(pb**q * ent for pb, ent in _column_entropies(a, q))


def conditional_tsallis_qexp(joint, q: float) -> float:
    """Escort-weighted q-expectation of per-column Tsallis entropies.

    Satisfies T(A|B) = (T(AB) - T(B)) / (1 + (1-q) T(B)).
    """
    a = as_joint(joint)
    q = check_rank(q)
    num = 0.0
    den = 0.0
    for pb, ent in _column_entropies(a, q):
        w = pb**q
        num += w * ent
        den += w
    if den <= _NORMALIZER_TOL:
        raise DegenerateNormalizerError(
            "escort normalizer sum(p_B**q) vanished in conditional entropy"
        )
    return num / den


def mutual_tsallis_additive(joint, q: float) -> float:
    """T(A) + T(B) - T(AB), the additive-form mutual entropy."""
    a = as_joint(joint)
    q = check_rank(q)
    ta = tsallis_entropy(np.sum(a, axis=1), q)
    tb = tsallis_entropy(np.sum(a, axis=0), q)
    tab = (1.0 - _power_sum(a.ravel(), q)) / (q - 1.0)
    return ta + tb - tab


def mutual_tsallis_qexp(joint, q: float) -> float:
    """T(A) minus the escort-weighted conditional entropy."""
    a = as_joint(joint)
    q = check_rank(q)
    ta = tsallis_entropy(np.sum(a, axis=1), q)
    return ta - conditional_tsallis_qexp(a, q)


def shannon_conditional_and_mutual(joint) -> tuple[float, float]:
    """Return (S(A|B), I(A:B)) for a joint distribution, in nats."""
    a = as_joint(joint)
    cond = sum(pb * ent for pb, ent in _column_entropies(a, None))
    sa = shannon_entropy(np.sum(a, axis=1))
    return cond, sa - cond
