"""Sort-and-set-empty (SSE) front coding over byte lines.

A text whose line order carries no meaning (word lists, URL lists, hash
lists) is treated as a multiset of byte-strings. The forward transform
sorts the lines, then replaces each line's longest common prefix with its
predecessor by a placeholder "empty symbol", one placeholder byte per
elided byte. The inverse copies the elided prefix back from the previous
reconstructed line. Both directions are pure functions; the round trip
reproduces the sorted input exactly (and the original as a multiset).

Prefix comparison is always exact-byte, even when the sort key is
case-insensitive; otherwise the original casing could not be restored.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import AllBytesUsed, AlphabetViolation, CorruptStream

LINE_SEP = 0x0A
CARRIAGE_RETURN = 0x0D

#: Byte values that may never serve as the empty symbol (line framing).
RESERVED_BYTES = frozenset({LINE_SEP, CARRIAGE_RETURN})

DEFAULT_EMPTY_SYMBOL = 0x20


class RunMode(enum.Enum):
    """How runs of elided bytes are represented in the container payload."""

    LITERAL = "literal"   # one empty-symbol byte per elided byte
    COUNTED = "counted"   # decimal count + one empty-symbol delimiter


class Collation(enum.Enum):
    """Sort order for lines. Only the sort key differs; stored bytes never do."""

    BYTEWISE = "bytewise"
    CASE_INSENSITIVE = "case-insensitive"   # ASCII letters folded in the key


@dataclass(frozen=True)
class SseConfig:
    """Transform parameters: placeholder byte, run representation, sort order."""

    empty_symbol: int = DEFAULT_EMPTY_SYMBOL
    run_mode: RunMode = RunMode.LITERAL
    collation: Collation = Collation.BYTEWISE

    def __post_init__(self):
        if not 0 <= self.empty_symbol <= 0xFF:
            raise ValueError(f"empty_symbol {self.empty_symbol} is not a byte")
        if self.empty_symbol in RESERVED_BYTES:
            raise ValueError(
                f"empty_symbol 0x{self.empty_symbol:02X} collides with line framing"
            )


class TransformedLine(NamedTuple):
    """One output line: count of elided prefix bytes plus the remaining suffix."""

    elided: int
    suffix: bytes


class Violation(NamedTuple):
    """Location of the first empty-symbol occurrence in an input."""

    line_index: int
    offset: int


def sort_lines(lines: Sequence[bytes], collation: Collation = Collation.BYTEWISE) -> list[bytes]:
    """Return the lines sorted under the collation.

    BYTEWISE compares raw bytes; CASE_INSENSITIVE compares a key with ASCII
    letters lower-cased but keeps the original bytes in the output. The sort
    is stable, so equal-key lines retain input order.
    """
    if collation is Collation.CASE_INSENSITIVE:
        return sorted(lines, key=bytes.lower)
    return sorted(lines)


def common_prefix_len(a: bytes, b: bytes) -> int:
    """Length of the longest common prefix of a and b, by exact byte equality."""
    n = min(len(a), len(b))
    i = 0
    while i < n and a[i] == b[i]:
        i += 1
    return i


def validate_alphabet(lines: Sequence[bytes], empty_symbol: int) -> Optional[Violation]:
    """Check that no line contains the empty symbol.

    Returns None when the input is clean, else the first offending
    (line index, byte offset). A violation is a reported outcome, not a
    fault; callers that require a clean alphabet raise AlphabetViolation.
    """
    for idx, line in enumerate(lines):
        pos = line.find(empty_symbol)
        if pos >= 0:
            return Violation(idx, pos)
    return None


def choose_empty_symbol(lines: Sequence[bytes]) -> int:
    """Pick the smallest byte absent from every line and legal as a placeholder.

    Raises AllBytesUsed when all 254 eligible values occur in the input.
    """
    used = set()
    for line in lines:
        used.update(line)
    for value in range(256):
        if value in RESERVED_BYTES:
            continue
        if value not in used:
            return value
    raise AllBytesUsed("every eligible byte value occurs in the input")


def sse_encode(lines: Sequence[bytes], config: SseConfig = SseConfig()) -> list[TransformedLine]:
    """Sort the lines and front-code each against its predecessor.

    Output k carries the exact-byte common prefix length with sorted line
    k-1 (0 for the first line) and the remaining suffix. In literal mode
    the input must not contain the empty symbol, because the serialized
    form could not otherwise distinguish placeholders from payload.
    """
    if config.run_mode is RunMode.LITERAL:
        hit = validate_alphabet(lines, config.empty_symbol)
        if hit is not None:
            raise AlphabetViolation(config.empty_symbol, hit.line_index, hit.offset)
    ordered = sort_lines(lines, config.collation)
    records: list[TransformedLine] = []
    prev = b""
    first = True
    for line in ordered:
        elided = 0 if first else common_prefix_len(prev, line)
        records.append(TransformedLine(elided, line[elided:]))
        prev = line
        first = False
    return records


def sse_decode(records: Sequence[TransformedLine], config: SseConfig = SseConfig()) -> list[bytes]:
    """Invert sse_encode: rebuild each line from its predecessor's prefix.

    Raises CorruptStream when a record elides more bytes than the previous
    reconstructed line has, or when the first record elides anything.
    """
    lines: list[bytes] = []
    prev = b""
    for idx, (elided, suffix) in enumerate(records):
        if idx == 0 and elided > 0:
            raise CorruptStream("first record has no predecessor to copy from")
        if elided > len(prev):
            raise CorruptStream(
                f"record {idx} elides {elided} bytes but previous line has {len(prev)}"
            )
        line = prev[:elided] + suffix
        lines.append(line)
        prev = line
    return lines
