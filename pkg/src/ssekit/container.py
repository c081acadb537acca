"""On-disk container for SSE-transformed text (".sse" files).

Layout, all fixed:

    MAGIC(4) = "SSE1" | version(1) = 0x01 | flags(1) | empty_symbol(1)
    payload: one record per line, LF-terminated

flags: bit0 run mode (0 literal, 1 counted), bit1 collation (0 bytewise,
1 case-insensitive), bits 2-7 reserved zero.

Literal payload lines are the empty symbol repeated `elided` times, then
the suffix: a 1:1 byte substitution, so the payload length equals the
sorted source length including one LF per line (asserted on every
serialize). Counted payload lines are the ASCII decimal digits of
`elided`, one empty-symbol delimiter, then the suffix; the count is
written unconditionally ("0" included) so a suffix starting with a digit
stays unambiguous.

No checksums: downstream general-purpose compressors wrap this format
and bring their own integrity checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadFlags, BadMagic, BadVersion, MalformedLine, TruncatedPayload
from .transform import LINE_SEP, Collation, RunMode, SseConfig, TransformedLine

MAGIC = b"SSE1"
VERSION = 0x01
HEADER_LEN = 7

_FLAG_COUNTED = 0x01
_FLAG_CASE_INSENSITIVE = 0x02

FILE_EXTENSION = ".sse"


@dataclass(frozen=True)
class ContainerHeader:
    """Decoded header fields; magic and version are implied constants."""

    run_mode: RunMode = RunMode.LITERAL
    collation: Collation = Collation.BYTEWISE
    empty_symbol: int = 0x20

    @classmethod
    def from_config(cls, config: SseConfig) -> "ContainerHeader":
        return cls(config.run_mode, config.collation, config.empty_symbol)

    def to_config(self) -> SseConfig:
        return SseConfig(self.empty_symbol, self.run_mode, self.collation)

    def pack(self) -> bytes:
        flags = 0
        if self.run_mode is RunMode.COUNTED:
            flags |= _FLAG_COUNTED
        if self.collation is Collation.CASE_INSENSITIVE:
            flags |= _FLAG_CASE_INSENSITIVE
        return MAGIC + bytes([VERSION, flags, self.empty_symbol])

    @classmethod
    def unpack(cls, data: bytes) -> "ContainerHeader":
        if len(data) < HEADER_LEN or data[:4] != MAGIC:
            raise BadMagic(f"not an SSE container (got {data[:4]!r})")
        if data[4] != VERSION:
            raise BadVersion(f"unsupported version 0x{data[4]:02X}")
        flags = data[5]
        if flags & ~(_FLAG_COUNTED | _FLAG_CASE_INSENSITIVE):
            raise BadFlags(f"reserved flag bits set: 0x{flags:02X}")
        run_mode = RunMode.COUNTED if flags & _FLAG_COUNTED else RunMode.LITERAL
        collation = (
            Collation.CASE_INSENSITIVE
            if flags & _FLAG_CASE_INSENSITIVE
            else Collation.BYTEWISE
        )
        return cls(run_mode, collation, data[6])


def serialize_payload(records: Sequence[TransformedLine], header: ContainerHeader) -> bytes:
    """Serialize records to the payload bytes only (no header)."""
    empty = header.empty_symbol
    out = bytearray()
    if header.run_mode is RunMode.LITERAL:
        for elided, suffix in records:
            out += bytes([empty]) * elided
            out += suffix
            out.append(LINE_SEP)
        # 1:1 substitution law: payload length == sorted source length + LFs
        assert len(out) == sum(r.elided + len(r.suffix) + 1 for r in records)
    else:
        for elided, suffix in records:
            out += b"%d" % elided
            out.append(empty)
            out += suffix
            out.append(LINE_SEP)
    return bytes(out)


def serialize(records: Sequence[TransformedLine], header: ContainerHeader) -> bytes:
    """Serialize header plus records to the full container byte-string."""
    return header.pack() + serialize_payload(records, header)


def _parse_literal_line(line: bytes, empty: int) -> TransformedLine:
    elided = 0
    while elided < len(line) and line[elided] == empty:
        elided += 1
    return TransformedLine(elided, line[elided:])


def _parse_counted_line(line: bytes, empty: int) -> TransformedLine:
    delim = line.find(empty)
    if delim < 0:
        raise MalformedLine(f"counted line {line!r} has no delimiter")
    digits = line[:delim]
    if not digits or not digits.isdigit():
        raise MalformedLine(f"counted line {line!r} has no valid count")
    return TransformedLine(int(digits), line[delim + 1:])


def deserialize(data: bytes) -> tuple[ContainerHeader, list[TransformedLine]]:
    """Parse a container byte-string back into (header, records).

    Exact inverse of serialize for the mode named in the header. Raises
    BadMagic/BadVersion/BadFlags on header problems, TruncatedPayload when
    the payload does not end with LF, and MalformedLine for counted-mode
    lines without a count or delimiter.
    """
    header = ContainerHeader.unpack(data)
    payload = data[HEADER_LEN:]
    if not payload:
        return header, []
    if payload[-1] != LINE_SEP:
        raise TruncatedPayload("payload does not end with a line separator")
    records = []
    parse = (
        _parse_literal_line
        if header.run_mode is RunMode.LITERAL
        else _parse_counted_line
    )
    for line in payload[:-1].split(bytes([LINE_SEP])):
        records.append(parse(line, header.empty_symbol))
    return header, records
