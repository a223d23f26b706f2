"""
Exception hierarchy shared by engines, services, CLI and API
"""
from typing import Optional


class PalctlError(Exception):
    """Base class for every error raised on purpose by the package"""


class InputError(PalctlError, ValueError):
    """Malformed or out-of-alphabet input"""


class DomainError(PalctlError, ValueError):
    """Operation undefined on this (well-formed) input"""


class ConstructionError(PalctlError, RuntimeError):
    """A requested object (fixed point, normalization) cannot be built"""


class ResourceError(PalctlError, RuntimeError):
    """A generator would exceed the configured size cap"""


class MorphismFileError(InputError):
    """Syntax or semantic error in a morphism text file"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        self.message = message
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
