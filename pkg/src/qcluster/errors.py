"""Domain errors shared across the package.

Every refusal carries a stable machine-readable ``code`` so callers (and the
CLI) can distinguish mathematical refusals from plain input errors.
"""

from __future__ import annotations

__all__ = [
    "QClusterError",
    "NotReducedError",
    "FormNotComputableError",
    "NotDivisibleError",
    "NotPointedError",
    "FormulaNotApplicableError",
    "NonIntegralError",
    "IncompatiblePairError",
]


class QClusterError(Exception):
    """Base class for mathematical refusals raised by this package."""

    code = "error"

    def __init__(self, message: str | None = None):
        super().__init__(message if message is not None else self.code)


class NotReducedError(QClusterError):
    """A Weyl word required to be reduced is not."""

    code = "not-reduced"


class FormNotComputableError(QClusterError):
    """The bilinear form is not determined for the requested weight pair."""

    code = "form-not-computable"


class NotDivisibleError(QClusterError):
    """Exact right division failed: the quotient does not exist in the torus."""

    code = "not-divisible"


class NotPointedError(QClusterError):
    """No unique dominance-extremal exponent exists.

    ``code`` is "not-pointed" for a missing maximum and "not-copointed" for a
    missing minimum; the raiser sets the message accordingly.
    """

    code = "not-pointed"

    def __init__(self, message: str | None = None, *, copointed: bool = False):
        if copointed:
            self.code = "not-copointed"
        super().__init__(message)


class FormulaNotApplicableError(QClusterError):
    """The closed formula is not proven for the requested arguments."""

    code = "formula-not-applicable"


class NonIntegralError(QClusterError):
    """A quantity that must be an integer came out fractional."""

    code = "non-integral"


class IncompatiblePairError(QClusterError):
    """The compatibility identity between L and the exchange matrix fails."""

    code = "incompatible-pair"
