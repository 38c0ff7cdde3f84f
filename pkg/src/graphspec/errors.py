"""Exception hierarchy shared by all graphspec modules."""


class GraphSpecError(Exception):
    """Base class for all graphspec errors."""


class NotSymmetric(GraphSpecError):
    """A symmetric matrix was required but the input is not symmetric."""


class NegativeDegree(GraphSpecError):
    """A degree-normalised representation needs strictly positive degrees.

    Negative edge weights can push a row sum to zero or below, in which
    case D^(-1/2) is not real-valued and the normalised Laplacian cannot
    be computed.
    """


class ZeroSpectrum(GraphSpecError):
    """All eigenvalues are zero, so spectral normalisation is undefined."""


class DimensionMismatch(GraphSpecError):
    """Operand shapes are incompatible."""


class LengthMismatch(DimensionMismatch):
    """Two vectors were expected to have equal length."""


class KindMismatch(GraphSpecError):
    """A basis or filter of a different kind was required."""


class ZeroVarianceChannel(GraphSpecError):
    """Pearson correlation is undefined for a constant channel."""


class NotNormalized(GraphSpecError):
    """Rows were expected to be standardised to mean 0 and sd 1."""


class NotConverged(GraphSpecError):
    """An iterative optimiser hit its iteration budget before converging."""


class SignalTooShort(GraphSpecError):
    """The signal is shorter than one analysis segment."""


class WrongLength(GraphSpecError):
    """A vector of a specific fixed length was required."""


class EmptyTrainingSet(GraphSpecError):
    """At least one training sample is required."""


class SingleClassTrainingSet(GraphSpecError):
    """Classifier training needs examples of both classes."""


class OddSampleCount(GraphSpecError):
    """Balanced two-condition folds need an even sample count."""


class ConfigError(GraphSpecError):
    """A run configuration value is missing, unknown, or invalid."""
