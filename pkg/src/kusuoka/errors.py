"""Exception hierarchy. Every error is a ``ValueError`` subclass."""


class KusuokaError(ValueError):
    """Base class for all input and contract errors raised by the package."""


class NonpositiveProb(KusuokaError):
    pass


class ProbSumOutOfTolerance(KusuokaError):
    pass


class TauOutOfRange(KusuokaError):
    pass


class GammaOutOfRange(KusuokaError):
    pass


class AlphaOutOfRange(KusuokaError):
    pass


class LambdaOutOfRange(KusuokaError):
    pass


class InvalidP(KusuokaError):
    pass


class InvalidQ(KusuokaError):
    pass


class InvalidParams(KusuokaError):
    pass


class InvalidMeasure(KusuokaError):
    pass


class InvalidSpectrum(KusuokaError):
    pass


class NotNormalized(KusuokaError):
    pass


class AlreadyAboveTarget(KusuokaError):
    pass


class EmptySet(KusuokaError):
    pass


class EmptyList(KusuokaError):
    pass


class DegenerateDistribution(KusuokaError):
    pass


class WitnessToleranceExceeded(KusuokaError):
    pass


class ConvergenceError(KusuokaError):
    pass


class TooManyAtoms(KusuokaError):
    pass


class PHatNotPresent(KusuokaError):
    pass
