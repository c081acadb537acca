"""Analytic facts about the per-symbol entropy term y(x) = x * log2(1/x).

y is the contribution of a symbol with probability x to order-0 entropy.
It peaks at x = 1/e with value 1/(e*ln 2) ~= 0.5307, increasing steeply to
the left of the peak and decreasing more gently to the right. The shape
explains when the sort-and-set-empty transform helps: moving probability
mass from a symbol below the peak to a placeholder symbol can only lower
that symbol's term, while symbols above the peak may gain or lose. With
only two line characters both can sit above the peak, and the transform
can increase entropy; `two_symbol_counterexample` returns a concrete
minimal instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import entropy as _entropy
from . import transform as _transform
from .container import ContainerHeader, serialize_payload
from .errors import DomainError

#: Location and value of the maximum of y on (0, 1].
Y_ARGMAX = 1.0 / math.e
Y_MAX = 1.0 / (math.e * math.log(2.0))


@dataclass(frozen=True)
class YFunctionFacts:
    argmax: float = Y_ARGMAX
    max_value: float = Y_MAX


Y_FACTS = YFunctionFacts()


def y(x: float) -> float:
    """Per-symbol entropy term x * log2(1/x) on the domain (0, 1]."""
    if not 0.0 < x <= 1.0:
        raise DomainError(f"y is defined on (0, 1], got {x!r}")
    return x * math.log2(1.0 / x)


def _y_closed_at_zero(x: float) -> float:
    # limit convention 0 * log2(1/0) = 0, used for probabilities that vanish
    return 0.0 if x == 0.0 else y(x)


class PairVerdict(NamedTuple):
    """Outcome for one (reduced, original) probability pair.

    `guaranteed` is True when the original probability lies at or below the
    peak 1/e, where y is increasing and the reduction cannot raise the
    term. Above the peak the comparison is genuinely uncertain; `holds`
    records what actually happened.
    """

    guaranteed: bool
    holds: bool


def entropy_delta_bound_check(
    p_pairs: Sequence[tuple[float, float]]
) -> list[PairVerdict]:
    """Classify (p_reduced, p_original) pairs by the peak-position criterion.

    Each pair must satisfy 0 <= p_reduced <= p_original <= 1 (DomainError
    otherwise). Returns one PairVerdict per pair.
    """
    verdicts = []
    for reduced, original in p_pairs:
        if not (0.0 <= reduced <= original <= 1.0):
            raise DomainError(
                f"expected 0 <= p' <= p <= 1, got p'={reduced!r}, p={original!r}"
            )
        verdicts.append(
            PairVerdict(
                guaranteed=original <= Y_ARGMAX,
                holds=_y_closed_at_zero(reduced) <= _y_closed_at_zero(original),
            )
        )
    return verdicts


class TwoSymbolWitness(NamedTuple):
    source_text: bytes
    transformed_text: bytes
    source_entropy: float
    target_entropy: float


# Smallest line set over a two-character alphabet on which the transform
# strictly raises entropy, found by exhaustive search over all multisets of
# up to 6 lines of length up to 4 over {a, b} (enumerated by line count,
# then total length, then lexicographic order; both characters required and
# at least one byte elided).
WITNESS_LINES = (b"a", b"ab")


def two_symbol_counterexample() -> TwoSymbolWitness:
    """Concrete two-character input whose literal transform raises entropy.

    Returns the serialized sorted source, its literal-mode transform, and
    both entropies; target_entropy >= source_entropy by construction.
    """
    config = _transform.SseConfig()
    records = _transform.sse_encode(WITNESS_LINES, config)
    source = b"".join(
        line + b"\n" for line in _transform.sort_lines(WITNESS_LINES, config.collation)
    )
    target = serialize_payload(records, ContainerHeader.from_config(config))
    report = _entropy.sse_entropy_report(source, target, config.empty_symbol)
    return TwoSymbolWitness(
        source, target, report.source_entropy, report.target_entropy
    )
