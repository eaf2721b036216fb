"""Exception hierarchy shared across the package."""

from __future__ import annotations


class GenusCodesError(Exception):
    """Base class for all errors raised by this package."""


class PauliParseError(GenusCodesError, ValueError):
    """Malformed Pauli string or out-of-range qubit index."""


class QubitCountMismatch(GenusCodesError, ValueError):
    pass


class NonCommutingGenerators(GenusCodesError):
    def __init__(self, i: int, j: int, first: str, second: str) -> None:
        super().__init__(f"generators {i} ({first}) and {j} ({second}) anticommute")
        self.indices = (i, j)
        self.operators = (first, second)


class PhasefulGenerator(GenusCodesError):
    pass


class InconsistentGenerators(GenusCodesError):
    """The generators multiply to -I, so the code space is empty."""


class GroupTooLarge(GenusCodesError):
    pass


class MemoryBudgetExceeded(GenusCodesError):
    pass


class ZeroVector(GenusCodesError):
    pass


class MissingLogicalPairs(GenusCodesError):
    pass


class NonOrthogonal(GenusCodesError):
    pass


class NoViolationFound(GenusCodesError):
    def __init__(self, max_weight: int, examined: int) -> None:
        super().__init__(
            f"no logical error found up to weight {max_weight} ({examined} Paulis examined)"
        )
        self.max_weight = max_weight
        self.examined = examined


class MethodDisagreement(GenusCodesError):
    pass


class CodeFileError(GenusCodesError, ValueError):
    """Syntax or schema problem in a code-definition document."""
