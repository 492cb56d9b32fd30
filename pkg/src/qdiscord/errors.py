"""Exception types shared across the package."""


class QDiscordError(ValueError):
    """Base class for all qdiscord input and numerical errors."""


class DimensionError(QDiscordError):
    """Matrix has an unsupported shape (only 2x2 and 4x4 are handled)."""


class HermiticityError(QDiscordError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class TraceError(QDiscordError):
    """Trace of a candidate density matrix is not 1 within tolerance."""


class NotPositiveError(QDiscordError):
    """An eigenvalue is negative beyond the numerical-noise window."""


class ConvergenceError(QDiscordError):
    """An iterative routine hit its iteration cap without converging."""


class DegenerateNormalizerError(QDiscordError):
    """The escort normalizer sum(p^q) vanished; cannot form a q-expectation.

    Defensive only: for a valid distribution the normalizer is strictly
    positive, so this should never trigger on checked inputs.
    """


class FormulaDomainError(QDiscordError):
    """A closed-form radicand went negative beyond numerical noise."""
