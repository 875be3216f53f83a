"""Exception hierarchy.

Every error raised on purpose by the toolkit derives from ``AwDahaError``,
which is itself a ``ValueError`` so callers that only guard against bad
input keep working. A failing mathematical check is reported through a
``VerificationReport`` and never raised.
"""


class AwDahaError(ValueError):
    """Base class for all toolkit errors."""


# scalars
class ScalarSyntaxError(AwDahaError):
    """A scalar string could not be parsed into the working field."""


class DenominatorVanishes(AwDahaError):
    """Specializing q hit a pole of the rational function."""


class ForbiddenQ(AwDahaError):
    """q is 0, 1 or -1 (a root of unity or not invertible)."""


# linear algebra
class Singular(AwDahaError):
    """Matrix has zero determinant."""


class DimensionError(AwDahaError):
    """Matrix shape is not square, mismatched or above the supported size."""


# realizations
class InvalidSpec(AwDahaError):
    """Module parameters violate the family constraints."""


class UnknownSymbol(AwDahaError):
    """A word mentions a generator the realization does not have."""


class BranchOverlap(AwDahaError, AssertionError):
    """Two basis-action rules assign different images to the same vector."""


# analysis
class NonSplittingSpectrum(AwDahaError):
    """No invariant subspace could be found and the spectrum does not split."""


# harness
class ConfigError(AwDahaError):
    """Sweep configuration is malformed or misses mandatory boundary points."""


class UnknownPoint(AwDahaError):
    """A point id cannot be parsed or names an unknown suite."""
