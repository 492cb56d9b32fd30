"""Tsallis-entropy correlation measures (q-discord) for two-qubit states.

Two inequivalent generalizations of quantum discord are computed for a
one-parameter family of entropies: the escort (q-expectation) variant
and the additive (plain expectation) variant.  Closed-form results for
Werner, isotropic and circulant X states serve as oracles for a generic
optimizer over projective measurements on qubit B.
"""

from .backend import BACKEND
from .classical import (
    Q_ONE_WINDOW,
    check_rank,
    conditional_tsallis_modified,
    conditional_tsallis_naive,
    conditional_tsallis_qexp,
    escort_distribution,
    mutual_tsallis_additive,
    mutual_tsallis_qexp,
    q_logarithm,
    shannon_conditional_and_mutual,
    shannon_entropy,
    tsallis_entropy,
)
from .discord import (
    DEFAULT_CONFIG,
    DiscordResult,
    OptimizationOutcome,
    OptimizerConfig,
    classical_correlations,
    q_discord,
    von_neumann_discord,
)
from .errors import (
    ConvergenceError,
    DegenerateNormalizerError,
    DimensionError,
    FormulaDomainError,
    HermiticityError,
    NotPositiveError,
    QDiscordError,
    TraceError,
)
from .families import (
    CirculantAnalytics,
    CirculantForms,
    FamilyForms,
    binary_tsallis,
    circulant_analytics,
    circulant_closed_forms,
    isotropic_closed_forms,
    lemma1_gap,
    make_circulant,
    make_isotropic,
    make_werner,
    werner_closed_forms,
    werner_nonnegativity_witness,
)
from .linalg import (
    Spectrum,
    clamp_spectrum,
    eigendecompose_hermitian,
    eigvals_hermitian,
    hermiticity_defect,
    load_state,
    partial_trace,
    state_from_dict,
    tensor_product,
    validate_state,
)
from .measurement import (
    MeasurementOutcome,
    ProjectiveMeasurement,
    apply_measurement,
    measured_conditional_entropy,
)
from .quantum import (
    QuantumMutual,
    pseudo_additivity_defect,
    quantum_mutual,
    tsallis_entropy_state,
    von_neumann_entropy,
)

__version__ = "0.1.0"
