"""Error hierarchy. Every error carries a stable ``code`` matching its class name."""


class ArtifactError(ValueError):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class ZeroVector(ArtifactError):
    pass


class NotBasis(ArtifactError):
    pass


class InvalidModel(ArtifactError):
    pass


class ContextMismatch(ArtifactError):
    pass


class NotInvertible(ArtifactError):
    pass


class BadConstantTerm(ArtifactError):
    pass


class TangentCrossing(ArtifactError):
    pass


class BasePointOnWall(ArtifactError):
    pass


class DegenerateArrangement(ArtifactError):
    pass


class UnresolvedDirection(ArtifactError):
    pass


class StopOnWall(ArtifactError):
    pass


class NonGenericStop(StopOnWall):
    """The backward trace of a broken line runs into a singular point."""


class UnknownClass(ArtifactError):
    pass


class NotTrivalent(ArtifactError):
    pass


class NotClippable(ArtifactError):
    pass


class ExcludedSurface(ArtifactError):
    pass


class NotSemiFano(ArtifactError):
    pass


class NotSemiFanoChain(NotSemiFano):
    pass


class WrongRank(ArtifactError):
    pass


class ParallelImages(ArtifactError):
    pass


class DegenerateParams(ArtifactError):
    pass


class ValuationMismatch(ArtifactError):
    pass


class UnknownChamber(ArtifactError):
    pass


class ConfigError(ArtifactError):
    """Malformed or schema-violating configuration input."""
