"""Exception hierarchy shared by the library and the command line."""


class FrameGeomError(Exception):
    """Base class for all errors raised by framegeom."""


class ShapeError(FrameGeomError, ValueError):
    """Operands have incompatible lengths or dimensions."""


class ValidationError(FrameGeomError, ValueError):
    """Input is well-formed but violates a mathematical requirement.

    ``report`` carries the failing validation report when one exists.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnsupportedRankError(FrameGeomError, ValueError):
    """A tensor operation was asked for a rank it does not handle."""


class ContractError(FrameGeomError, ValueError):
    """A precondition of an analysis does not hold for the given input."""


class ParseError(FrameGeomError, ValueError):
    """Manifold document is not syntactically valid JSON."""


class SchemaError(FrameGeomError, ValueError):
    """Manifold document does not match the expected schema.

    ``path`` names the offending field, e.g. ``brackets[1].coeffs[2]``.
    """

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
