"""Exception hierarchy shared by all ssekit modules."""

from __future__ import annotations


class SseError(Exception):
    """Base class for every error raised by ssekit."""


class AlphabetViolation(SseError):
    """A line contains the configured empty symbol (literal mode only)."""

    def __init__(self, symbol: int, line_index: int, offset: int):
        self.symbol = symbol
        self.line_index = line_index
        self.offset = offset
        super().__init__(
            f"empty symbol 0x{symbol:02X} occurs in line {line_index} "
            f"at byte offset {offset}"
        )


class AllBytesUsed(SseError):
    """Every eligible byte value occurs in the input; no empty symbol fits."""


class CorruptStream(SseError):
    """A transformed or coded stream cannot be decoded."""


class ContainerError(SseError):
    """Base class for container framing errors."""


class BadMagic(ContainerError):
    pass


class BadVersion(ContainerError):
    pass


class BadFlags(ContainerError):
    pass


class MalformedLine(ContainerError):
    """A counted-mode payload line has no digits or no delimiter."""


class TruncatedPayload(ContainerError):
    """Payload is nonempty but does not end with the line separator."""


class EmptyText(SseError):
    """An operation that needs at least one byte got an empty text."""


class LengthMismatch(SseError):
    """Source and literal-mode transformed text differ in length."""


class DomainError(SseError):
    """Argument outside the mathematical domain of the operation."""


class EmptyInput(SseError):
    """The built-in codec requires a nonempty input."""


class ToolNotFound(SseError):
    """The external compressor executable could not be launched."""


class NonZeroExit(SseError):
    """The external compressor exited with a nonzero status."""


class ToolTimeout(SseError):
    """The external compressor exceeded its time budget."""


class IoError(SseError):
    """File or stream input/output failed."""
