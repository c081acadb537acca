"""Canonical order-0 Huffman codec used as the built-in compressor.

Wire format:

    [256B] code length per byte value, 0 = absent, else 1..32
    [8B]   original length, unsigned big-endian
    [NB]   codewords packed MSB-first, final partial byte zero-padded

Codes are canonical: lengths come from a Huffman tree with deterministic
tie-breaking (seeded in symbol order, merges numbered), codewords assigned
in (length, symbol) order. A single distinct symbol gets a 1-bit code,
since a 0-length code cannot be packed.
"""

from __future__ import annotations

import heapq
import struct
from collections import Counter

from .errors import CorruptStream, EmptyInput, SseError

TABLE_LEN = 256
LENGTH_FIELD = struct.Struct(">Q")
HEADER_LEN = TABLE_LEN + LENGTH_FIELD.size
MAX_CODE_LEN = 32


def _code_lengths(freqs: Counter) -> list[int]:
    """Huffman code length per byte value (0 for absent symbols)."""
    lengths = [0] * 256
    if len(freqs) == 1:
        lengths[next(iter(freqs))] = 1
        return lengths
    # (frequency, insertion order) keys keep merges deterministic
    heap: list[tuple[int, int, object]] = []
    for order, symbol in enumerate(sorted(freqs)):
        heap.append((freqs[symbol], order, symbol))
    heapq.heapify(heap)
    order = len(heap)
    while len(heap) > 1:
        fa, _, a = heapq.heappop(heap)
        fb, _, b = heapq.heappop(heap)
        heapq.heappush(heap, (fa + fb, order, (a, b)))
        order += 1
    stack = [(heap[0][2], 0)]
    while stack:
        node, depth = stack.pop()
        if isinstance(node, tuple):
            stack.append((node[0], depth + 1))
            stack.append((node[1], depth + 1))
        else:
            lengths[node] = depth
    return lengths


def _canonical_codes(lengths: list[int]) -> dict[int, tuple[int, int]]:
    """Map symbol -> (codeword, bit length), assigned in (length, symbol) order."""
    codes: dict[int, tuple[int, int]] = {}
    code = 0
    prev_len = 0
    for symbol in sorted(
        (s for s in range(256) if lengths[s]), key=lambda s: (lengths[s], s)
    ):
        length = lengths[symbol]
        code <<= length - prev_len
        prev_len = length
        if code >= 1 << length:
            raise SseError("code lengths overflow the canonical code space")
        codes[symbol] = (code, length)
        code += 1
    return codes


def huffman_encode(data: bytes) -> bytes:
    """Compress data; raises EmptyInput on an empty byte-string."""
    if not data:
        raise EmptyInput("cannot build a code for an empty input")
    lengths = _code_lengths(Counter(data))
    if max(lengths) > MAX_CODE_LEN:
        raise SseError(
            f"input needs a code longer than {MAX_CODE_LEN} bits; "
            "format cannot represent it"
        )
    codes = _canonical_codes(lengths)

    out = bytearray(bytes(lengths) + LENGTH_FIELD.pack(len(data)))
    bit_buf = 0
    bit_len = 0
    for value in data:
        code, length = codes[value]
        bit_buf = (bit_buf << length) | code
        bit_len += length
        while bit_len >= 8:
            bit_len -= 8
            out.append((bit_buf >> bit_len) & 0xFF)
    if bit_len:
        out.append((bit_buf << (8 - bit_len)) & 0xFF)
    return bytes(out)


def huffman_decode(coded: bytes) -> bytes:
    """Invert huffman_encode; raises CorruptStream on any malformed input."""
    if len(coded) < HEADER_LEN:
        raise CorruptStream("coded stream shorter than its fixed header")
    lengths = list(coded[:TABLE_LEN])
    (original_len,) = LENGTH_FIELD.unpack_from(coded, TABLE_LEN)
    if original_len == 0:
        return b""

    present = [s for s in range(256) if lengths[s]]
    if not present:
        raise CorruptStream("nonzero declared length but all-zero code table")
    if any(lengths[s] > MAX_CODE_LEN for s in present):
        raise CorruptStream("code length exceeds the 32-bit format limit")
    kraft = sum(1 << (MAX_CODE_LEN - lengths[s]) for s in present)
    if kraft > 1 << MAX_CODE_LEN:
        raise CorruptStream("code lengths violate the Kraft inequality")

    # canonical reconstruction: per length, the first code and symbol slice
    ordered = sorted(present, key=lambda s: (lengths[s], s))
    first_code = {}
    first_index = {}
    count = Counter(lengths[s] for s in present)
    code = 0
    prev_len = 0
    index = 0
    for symbol in ordered:
        length = lengths[symbol]
        if length != prev_len:
            code <<= length - prev_len
            first_code[length] = code
            first_index[length] = index
            prev_len = length
        code += 1
        index += 1

    out = bytearray()
    stream = coded[HEADER_LEN:]
    max_len = lengths[ordered[-1]]
    acc = 0
    acc_len = 0
    pos_byte = 0
    pos_bit = 7
    total_bits = len(stream) * 8
    consumed = 0
    while len(out) < original_len:
        if consumed >= total_bits:
            raise CorruptStream("codeword stream ends early")
        bit = (stream[pos_byte] >> pos_bit) & 1
        pos_bit -= 1
        if pos_bit < 0:
            pos_bit = 7
            pos_byte += 1
        consumed += 1
        acc = (acc << 1) | bit
        acc_len += 1
        if acc_len in count:
            offset = acc - first_code[acc_len]
            if 0 <= offset < count[acc_len]:
                out.append(ordered[first_index[acc_len] + offset])
                acc = 0
                acc_len = 0
                continue
        if acc_len >= max_len:
            raise CorruptStream("bit pattern matches no assigned codeword")
    return bytes(out)
