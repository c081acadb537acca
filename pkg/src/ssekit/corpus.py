"""Line-file ingestion and deterministic synthetic benchmark corpora.

Three families mirror the classic line-order-independent workloads:
pronounceable pseudo-word lists, URL lists with heavy shared prefixes by
construction, and uniform 32-character hex lists with hash-like
statistics. Generation is a pure function of (family, count, seed).
Generated lines never contain LF, CR, or the 0x20 default empty symbol,
so default transform settings are always safe on them.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import BinaryIO

from .errors import IoError

CONSONANTS = "bcdfghjklmnpqrstvwxz"
VOWELS = "aeiou"
HEX_DIGITS = "0123456789abcdef"
TLDS = ("com", "net", "org", "io")

URL_DOMAIN_POOL = 50
URL_SEGMENT_POOL = 200
URL_MAX_SEGMENTS = 4
HEX_LINE_LEN = 32
WORD_MIN_LEN = 3
WORD_MAX_LEN = 12


class Family(enum.Enum):
    WORD_LIST = "word"
    URL_LIST = "url"
    HEX_LIST = "hex"


@dataclass(frozen=True)
class CorpusSpec:
    family: Family
    count: int
    seed: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")


def split_lines(data: bytes, crlf: bool = False) -> list[bytes]:
    """Split on LF; a final line without trailing LF is accepted.

    With crlf=True one trailing CR is stripped from each line.
    """
    if not data:
        return []
    lines = data.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    if crlf:
        lines = [line[:-1] if line.endswith(b"\r") else line for line in lines]
    return lines


def read_lines(stream: BinaryIO, crlf: bool = False) -> list[bytes]:
    """Read a whole byte stream and split it into lines."""
    try:
        data = stream.read()
    except OSError as exc:
        raise IoError(str(exc)) from exc
    return split_lines(data, crlf)


def _word(rng: random.Random, min_len: int = WORD_MIN_LEN, max_len: int = WORD_MAX_LEN) -> str:
    length = rng.randint(min_len, max_len)
    chars = []
    for i in range(length):
        pool = CONSONANTS if i % 2 == 0 else VOWELS
        chars.append(rng.choice(pool))
    return "".join(chars)


def _generate_words(count: int, rng: random.Random) -> list[bytes]:
    return [_word(rng).encode("ascii") for _ in range(count)]


def _generate_urls(count: int, rng: random.Random) -> list[bytes]:
    domains = [
        f"{_word(rng, 4, 8)}.{rng.choice(TLDS)}" for _ in range(URL_DOMAIN_POOL)
    ]
    segments = [_word(rng, 3, 10) for _ in range(URL_SEGMENT_POOL)]
    lines = []
    for _ in range(count):
        path = "/".join(
            rng.choice(segments) for _ in range(rng.randint(1, URL_MAX_SEGMENTS))
        )
        lines.append(f"http://{rng.choice(domains)}/{path}".encode("ascii"))
    return lines


def _generate_hex(count: int, rng: random.Random) -> list[bytes]:
    return [
        "".join(rng.choice(HEX_DIGITS) for _ in range(HEX_LINE_LEN)).encode("ascii")
        for _ in range(count)
    ]


_GENERATORS = {
    Family.WORD_LIST: _generate_words,
    Family.URL_LIST: _generate_urls,
    Family.HEX_LIST: _generate_hex,
}


def generate(spec: CorpusSpec) -> list[bytes]:
    """Produce the deterministic corpus for the spec (same spec, same bytes)."""
    rng = random.Random(spec.seed)
    return _GENERATORS[spec.family](spec.count, rng)
