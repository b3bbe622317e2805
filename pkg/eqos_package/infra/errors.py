"""
Exception hierarchy for the eqos engine.

Library code raises these; only the command layer catches them.
"""

from typing import Optional


class EqosError(Exception):
    """Base exception for every error raised by the engine."""
    pass


class ParseError(EqosError):
    """Raised when a text input (file or string) cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, source: Optional[str] = None):
        self.line = line
        self.source = source
        location = ""
        if source:
            location += f"{source}:"
        if line is not None:
            location += f"line {line}: "
        elif location:
            location += " "
        super().__init__(f"{location}{message}")


class ArrangementParseError(ParseError):
    """Malformed arrangement file."""
    pass


class PolynomialParseError(ParseError):
    """Malformed polynomial text."""
    pass


class IdealFileParseError(ParseError):
    """Malformed ideal file."""
    pass


class SignVectorParseError(ParseError):
    """Malformed covector or tope file."""
    pass


class PreconditionError(EqosError):
    """An operation was called outside its documented precondition."""
    pass


class ArrangementError(EqosError):
    """Invalid arrangement data (zero normal, repeated hyperplane, ...)."""
    pass


class FourierMotzkinLimitError(EqosError):
    """Fourier-Motzkin elimination produced more rows than the configured cap."""

    def __init__(self, rows: int, cap: int):
        self.rows = rows
        self.cap = cap
        super().__init__(
            f"Fourier-Motzkin elimination produced {rows} intermediate rows "
            f"(cap {cap}); raise EQOS_MAX_FM_ROWS to continue"
        )


class ConstructionError(EqosError):
    """An internal construction invariant failed; indicates a bug."""
    pass


class SalvettiValidationError(EqosError):
    """Covector data is not closed under the compositions the Salvetti poset needs."""
    pass


class AdmissibilityError(EqosError):
    """The involution moves a vertex of a simplex it fixes setwise."""
    pass
