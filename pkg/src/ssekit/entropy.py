"""Order-0 byte entropy and the pre/post-transform accounting checks.

Entropy is computed over raw bytes including the LF line separator; the
alphabet is the fixed 256-value byte space with zero counts contributing
nothing. H/8 is the theoretical compression ratio of an order-0 entropy
coder.

The report for a literal-mode transform also verifies, in exact integer
arithmetic, that the placeholder substitution only ever moved counts from
ordinary bytes to the empty symbol:

    counts_not_increased        every byte but the empty symbol occurs at
                                most as often as before
    empty_count_balances        placeholder count equals the total count
                                removed from the other bytes
    probabilities_bounded       0 <= p'_i <= p_i <= 1 for every other byte
    empty_probability_balances  placeholder probability is in [0, 1] and
                                equals the probability mass removed

These apply to literal mode only; counted mode changes the text length,
so the count accounting does not hold there.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import EmptyText, LengthMismatch

RATIO_DENOMINATOR_BITS = 8


@dataclass(frozen=True)
class ByteHistogram:
    """Occurrence count per byte value over a text of `total` bytes."""

    counts: tuple[int, ...]
    total: int

    @classmethod
    def from_bytes(cls, text: bytes) -> "ByteHistogram":
        counts = [0] * 256
        for value, n in Counter(text).items():
            counts[value] = n
        return cls(tuple(counts), len(text))

    def to_dict(self) -> dict:
        return {"counts": list(self.counts), "total": self.total}


def histogram(text: bytes) -> ByteHistogram:
    """Count occurrences of every byte value; total equals len(text)."""
    return ByteHistogram.from_bytes(text)


def shannon_entropy(hist: ByteHistogram) -> float:
    """Order-0 entropy of the histogram in bits per byte.

    Raises EmptyText for a zero-length text (entropy undefined).
    """
    m = hist.total
    if m == 0:
        raise EmptyText("entropy of an empty text is undefined")
    h = 0.0
    for q in hist.counts:
        if q:
            h += (q / m) * math.log2(m / q)
    return h


def compression_ratio(entropy_bits: float) -> float:
    """Theoretical order-0 compression ratio: entropy over 8 bits per byte."""
    return entropy_bits / RATIO_DENOMINATOR_BITS


@dataclass(frozen=True)
class FormulaChecks:
    """Exact integer accounting checks for a literal-mode transform pair."""

    counts_not_increased: bool
    empty_count_balances: bool
    probabilities_bounded: bool
    empty_probability_balances: bool

    def all_hold(self) -> bool:
        return (
            self.counts_not_increased
            and self.empty_count_balances
            and self.probabilities_bounded
            and self.empty_probability_balances
        )

    def to_dict(self) -> dict:
        return {
            "counts_not_increased": self.counts_not_increased,
            "empty_count_balances": self.empty_count_balances,
            "probabilities_bounded": self.probabilities_bounded,
            "empty_probability_balances": self.empty_probability_balances,
        }


@dataclass(frozen=True)
class EntropyReport:
    """Entropies, ratios, and accounting checks for a source/transformed pair."""

    source_hist: ByteHistogram
    target_hist: ByteHistogram
    source_entropy: float
    target_entropy: float
    source_ratio: float
    target_ratio: float
    empty_count: int
    formula_checks: FormulaChecks

    def to_dict(self) -> dict:
        return {
            "source_hist": self.source_hist.to_dict(),
            "target_hist": self.target_hist.to_dict(),
            "source_entropy": self.source_entropy,
            "target_entropy": self.target_entropy,
            "source_ratio": self.source_ratio,
            "target_ratio": self.target_ratio,
            "empty_count": self.empty_count,
            "formula_checks": self.formula_checks.to_dict(),
        }


def sse_entropy_report(
    source_text: bytes, transformed_text: bytes, empty_symbol: int
) -> EntropyReport:
    """Compare a source text against its literal-mode transform.

    Literal mode is a 1:1 byte substitution, so the texts must have equal
    nonzero length (LengthMismatch / EmptyText otherwise). All four
    accounting checks hold on any faithful transform pair; a False flags
    corruption rather than raising.
    """
    if len(source_text) != len(transformed_text):
        raise LengthMismatch(
            f"source has {len(source_text)} bytes, transform {len(transformed_text)}"
        )
    if not source_text:
        raise EmptyText("nothing to analyze")

    source_hist = histogram(source_text)
    target_hist = histogram(transformed_text)
    m = source_hist.total
    q0 = target_hist.counts[empty_symbol]

    others = [i for i in range(256) if i != empty_symbol]
    removed = sum(source_hist.counts[i] - target_hist.counts[i] for i in others)

    checks = FormulaChecks(
        counts_not_increased=all(
            target_hist.counts[i] <= source_hist.counts[i] for i in others
        ),
        empty_count_balances=q0 == removed,
        probabilities_bounded=all(
            0 <= target_hist.counts[i] <= source_hist.counts[i] <= m for i in others
        ),
        empty_probability_balances=(0 <= q0 <= m) and q0 == removed,
    )

    h = shannon_entropy(source_hist)
    h0 = shannon_entropy(target_hist)
    return EntropyReport(
        source_hist=source_hist,
        target_hist=target_hist,
        source_entropy=h,
        target_entropy=h0,
        source_ratio=compression_ratio(h),
        target_ratio=compression_ratio(h0),
        empty_count=q0,
        formula_checks=checks,
    )
