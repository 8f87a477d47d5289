__all__ = ("QuiverRingsError", "InvalidInputError", "InvalidQuiverError", "CyclicQuiverError",
           "BaseMismatchError", "PieConstructionError", "CategoryNotAcyclicError",
           "CapExceededError", "InternalInvariantError", "PieNotClosedError",
           "InvariantCheckFailed",)


class QuiverRingsError(Exception):
    """
    Base class for every error raised by quiver_rings.

    Each subclass carries the exit code the command-line interface reports for it.
    """

    exit_code: int = 1


class InvalidInputError(QuiverRingsError):
    exit_code = 2


class InvalidQuiverError(InvalidInputError):
    pass


class CyclicQuiverError(InvalidInputError):
    def __init__(self, message: str = "path set may be infinite") -> None:
        super().__init__(message)


class BaseMismatchError(InvalidInputError):
    pass


class PieConstructionError(InvalidInputError):
    pass


class CategoryNotAcyclicError(InvalidInputError):
    def __init__(self, message: str = "category not acyclic") -> None:
        super().__init__(message)


class CapExceededError(QuiverRingsError):
    exit_code = 3

    def __init__(self, cap: int, required: int) -> None:
        super().__init__(f"subquiver enumeration cap exceeded: {required} candidates, "
                         f"cap is {cap}")
        self.cap = cap
        self.required = required


class InternalInvariantError(QuiverRingsError):
    exit_code = 4


class PieNotClosedError(InternalInvariantError):
    def __init__(self, detail: str) -> None:
        super().__init__(f"PIE not closed: {detail}")


class InvariantCheckFailed(InternalInvariantError):
    def __init__(self, invariant: str, detail: str) -> None:
        super().__init__(f"{invariant}: {detail}")
        self.invariant = invariant
        self.detail = detail
