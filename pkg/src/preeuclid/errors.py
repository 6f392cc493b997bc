"""Exception hierarchy.

Everything raised on bad input derives from :class:`InputError`; the CLI maps
those to exit status 2.  :class:`InvariantViolation` signals a bug (exit 3).
"""

from __future__ import annotations


class PreEuclidError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PreEuclidError, ValueError):
    pass


class ScalarParseError(InputError):
    def __init__(self, text: str, offset: int, reason: str, path: str = ""):
        self.text = text
        self.offset = offset
        self.reason = reason
        self.path = path
        where = f"{path}: " if path else ""
        super().__init__(f"{where}cannot parse scalar {text!r} at offset {offset}: {reason}")


class JSONSyntaxError(InputError):
    def __init__(self, source: str, lineno: int, colno: int, msg: str):
        self.lineno = lineno
        self.colno = colno
        super().__init__(f"{source}:{lineno}:{colno}: invalid JSON: {msg}")


class DomainError(InputError):
    """A literal is well formed but names no field element (zero denominator)."""


class ShapeError(InputError):
    pass


class FieldMismatchError(InputError):
    pass


class StructureError(InputError):
    """Invalid space definition: duplicate labels, empty basis, bad sizes."""


class SchemaError(InputError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class SingularMatrixError(InputError, ArithmeticError):
    def __init__(self, rank: int, size: int):
        self.rank = rank
        self.size = size
        super().__init__(f"matrix is singular: rank {rank} < {size}")


class SearchLimitError(InputError):
    pass


class InvariantViolation(PreEuclidError, RuntimeError):
    pass
