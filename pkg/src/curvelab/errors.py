"""Exception hierarchy.

Three families matter to callers: schema problems with input files,
genericity rejections (the input violates a transversality/simplicity
precondition and results would be untrustworthy), and identity violations
(an exact integer identity failed to close, the strongest alarm the
engine can raise).  The CLI maps them to distinct exit codes.
"""


class CurvelabError(Exception):
    """Base class for all engine errors."""


# --- input / schema -------------------------------------------------------

class SchemaError(CurvelabError):
    pass


class DegreeMismatch(SchemaError):
    pass


class EmptyCurve(SchemaError):
    pass


# --- geometry-core --------------------------------------------------------

class CoincidentPoints(CurvelabError):
    pass


class CoincidentLines(CurvelabError):
    pass


class OnInfinity(CurvelabError):
    """Chart evaluation requested at a point of the line at infinity."""


# --- genericity gate ------------------------------------------------------

class GenericityError(CurvelabError):
    """Input fails a genericity precondition; results would be unreliable."""


class DegenerateFlex(GenericityError):
    pass


class TangentialIntersection(GenericityError):
    pass


class TripleTangent(GenericityError):
    pass


class InfinityTangency(GenericityError):
    """A bitangent passes through a point of C intersect L_infinity."""


class NonTransverseInfinity(GenericityError):
    pass


class NonGenericTangent(GenericityError):
    pass


class NonSimpleTangency(GenericityError):
    pass


class AmbiguousSide(GenericityError):
    pass


class NotAffine(GenericityError):
    """Affine verifier called on a curve meeting the line at infinity."""


class NodeClassificationAmbiguous(GenericityError):
    pass


# --- numerical diagnostics ------------------------------------------------

class NumericalError(CurvelabError):
    pass


class PolishDivergence(NumericalError):
    pass


class EmptyRealLocus(NumericalError):
    pass


class SingularPointHit(NumericalError):
    pass


class TracingGapError(NumericalError):
    pass


class FlexMismatch(NumericalError):
    """Algebraic and parametric flex counts disagree (tracing too coarse)."""


class UncataloguedJump(NumericalError):
    """A discontinuity of the half-tangent count matched no known event."""


# --- identity violations --------------------------------------------------

class IdentityViolation(CurvelabError):
    """An exact integer identity failed; carries lhs/rhs for diagnostics."""

    def __init__(self, message, lhs=None, rhs=None):
        super().__init__(message)
        self.lhs = lhs
        self.rhs = rhs


class KleinViolation(IdentityViolation):
    pass
