"""Exception hierarchy shared by every module of the package."""


class NakayamaError(ValueError):
    """Base class for user-facing errors."""


class ParseError(NakayamaError):
    pass


class InadmissibleSequence(NakayamaError):
    pass


class MisplacedOne(InadmissibleSequence):
    """An entry equal to 1 somewhere other than the last position."""


class LineUnsupported(NakayamaError):
    """The theta machinery only exists for cycle algebras."""


class InvalidModule(NakayamaError):
    pass


class ProjectiveInput(NakayamaError):
    pass


class SelfInjectiveInput(NakayamaError):
    pass


class FiniteGlobalDimension(NakayamaError):
    pass


class NonSquare(NakayamaError):
    pass


class MalformedCertificate(NakayamaError):
    pass


class InvalidFactorList(NakayamaError):
    pass


class InternalInconsistency(RuntimeError):
    """A computed object violates an invariant it is guaranteed to satisfy.

    Never caused by user input; the CLI maps it to exit code 3.
    """
