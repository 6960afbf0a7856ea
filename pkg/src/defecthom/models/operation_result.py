"""Result type returned by every service operation."""

from dataclasses import dataclass
from enum import IntEnum
from typing import Generic, Optional, TypeVar

T = TypeVar("T")
U = TypeVar("U")


class ResultCode(IntEnum):
    """Failure categories carried in OperationResult.code."""

    OK = 0
    CONTRACT_VIOLATION = 1
    USAGE = 2
    PRECONDITION = 3
    SOLVER_FAULT = 4
    NUMERIC_FAULT = 5
    STORAGE = 6

    def exit_code(self) -> int:
        """Process exit code of the command line surface for this category."""
        if self == ResultCode.OK:
            return 0
        if self == ResultCode.USAGE:
            return 2
        return 1


@dataclass
class OperationResult(Generic[T]):
    """Outcome of a service operation: data on success, message and code on failure."""

    success: bool
    message: str = ""
    code: int = ResultCode.OK
    data: Optional[T] = None

    __create_key = object()

    @classmethod
    def succeed(cls, data: T):
        """Successful result carrying data: OperationResult[T].succeed(value)."""
        return OperationResult[T](cls.__create_key, True, "", ResultCode.OK, data)

    @classmethod
    def fail(cls, message: str, code: int = ResultCode.SOLVER_FAULT):
        """Failed result: OperationResult[T].fail("message", ResultCode.USAGE)."""
        return OperationResult[T](cls.__create_key, False, message, code, None)

    def as_fail(self):
        """Same failure re-typed for the caller's result type."""
        return OperationResult[U](self.__create_key, False, self.message, self.code, None)

    def with_context(self, context: str):
        """Prefixes the failure message with the caller's context, keeping the code."""
        return OperationResult[T](
            self.__create_key, False, f"{context}: {self.message}", self.code, None
        )

    def __init__(
        self, create_key: object, success: bool, message: str, code: int, data: Optional[T]
    ):
        if create_key is not OperationResult.__create_key:
            raise TypeError("OperationResult must be created through succeed or fail")
        self.success = success
        self.message = message
        self.code = code
        self.data = data
