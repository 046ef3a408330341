"""Exception hierarchy shared across the package.

Classification-level failures carry machine-readable payloads (witness pairs,
pipeline stage tags) so the CLI can map them onto exit codes and reports.
"""


class JordanMapsError(Exception):
    """Base class for all package-specific errors."""


class UnsupportedInput(JordanMapsError, ValueError):
    """Input outside the supported hypotheses (e.g. a circ-product request in
    characteristic 2, or a zero matrix where a nonzero one is required)."""


class UnsupportedSize(UnsupportedInput):
    """Matrix size outside the supported range (classification needs n >= 2)."""


class NotJordanMultiplicative(JordanMapsError):
    """The candidate map provably violates Jordan multiplicativity.

    Attributes:
        witness: pair (X, Y) with phi(X*Y) != phi(X)*phi(Y) in the map's
            product, or None when the violation was structural but a concrete
            pair is attached elsewhere.
        detail: human-readable explanation.
    """

    def __init__(self, detail, witness=None):
        super().__init__(detail)
        self.detail = detail
        self.witness = witness


class InvariantViolation(JordanMapsError):
    """A pipeline stage's postcondition failed.

    This signals that the input map cannot be Jordan multiplicative even when
    the (possibly sampled) product checks passed, but no concrete violating
    pair was located within the verification budget.

    Attributes:
        stage: short tag naming the pipeline stage that failed.
        witness: stage-specific payload describing the failure.
        detail: human-readable explanation.
    """

    def __init__(self, stage, detail, witness=None):
        super().__init__(f"[{stage}] {detail}")
        self.stage = stage
        self.detail = detail
        self.witness = witness
