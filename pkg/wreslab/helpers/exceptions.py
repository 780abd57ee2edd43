# Copyright 2024 Stefan "Newbyte" Hansson
# SPDX-License-Identifier: GPL-3.0-or-later


class VerificationFailedError(Exception):
    """Exception to be raised when a verification suite or check finds a counterexample.
    This is handled separately from NonBugError, as the exit code must tell scripts that
    the arithmetic ran fine but a checked identity did not hold."""

    pass


class NonBugError(Exception):
    """Exception which originates from a problem not caused by wreslab's code. This
    could for example be raised if a symbol file is malformed or a requested depth
    can not be reached with the given input."""

    pass


class WreslabError(NonBugError):
    """Base class of all errors raised by the calculus itself."""

    pass


class StructuralError(WreslabError):
    """Shapes, depths or indices of the operands do not fit together."""

    pass


class PrecisionError(WreslabError):
    """The requested depth lies below the floor that the inputs can determine."""

    def __init__(self, message: str, attainable: int | None = None) -> None:
        super().__init__(message)
        self.attainable = attainable


class PreconditionError(WreslabError):
    pass


class EllipticityError(WreslabError):
    """A principal symbol that must be invertible is not."""

    pass


class ConditioningError(WreslabError):
    """Spectrum too close to an integration contour."""

    pass


class NotAnAutomorphismError(WreslabError):
    pass


class StructureError(WreslabError):
    """A transition map sends the identity to a non-scalar matrix."""

    pass


class NotAConvolutionBundleError(WreslabError):
    """Triple products of frames are not constant across a triple's samples."""

    pass


class UnsupportedOracleError(WreslabError):
    pass


class SchemaError(WreslabError):
    """A JSON document does not follow the expected schema.

    :param pointer: JSON pointer (RFC 6901) to the offending value
    """

    def __init__(self, pointer: str, message: str) -> None:
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
