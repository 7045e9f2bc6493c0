"""
Exceptions

Domain errors raised by the quandle_lab core. All of them are ValueError
subclasses so callers that only care about bad input can catch ValueError.
"""

from typing import List, Optional, Tuple


class QuandleAxiomError(ValueError):
    """An operation table violates one of the quandle (or rack) axioms"""

    def __init__(self, axiom: str, witness: Tuple[int, ...], message: Optional[str] = None):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or f"axiom {axiom} fails at {witness}")


class CocycleError(ValueError):
    """A cochain used as a Boltzmann weight is not a quandle cocycle"""


class CoefficientMismatchError(ValueError):
    """Two values live over incompatible coefficient groups"""


class PresentationError(ValueError):
    """Braid or surface-braid data with out-of-range indices or signs"""


class DocumentError(ValueError):
    """An input document is unreadable or fails its JSON Schema"""

    def __init__(self, message: str, errors: Optional[List[str]] = None):
        self.errors = errors or []
        super().__init__(message)
