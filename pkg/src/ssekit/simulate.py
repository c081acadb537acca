"""Monte Carlo study of transform gain over random-probability alphabets.

For each alphabet size (2 to 52 by default) the study draws probability
vectors uniformly from the simplex, synthesizes line corpora from them,
applies the literal-mode transform, and aggregates the order-0 entropy
before and after. Alphabet characters map to 'A'-'Z' then 'a'-'z', which
keeps every corpus clear of LF and the 0x20 empty symbol.

Determinism contract: the full study output is a pure function of the
config. Every trial derives its own RNG seed from SHA-256 of
"<seed>:<alphabet size>:<trial index>", so trials are independent and the
execution schedule cannot change results.
"""

from __future__ import annotations

import csv
import hashlib
import itertools
import json
import random
from dataclasses import asdict, dataclass
from typing import Sequence, TextIO

from .container import ContainerHeader, serialize_payload
from .entropy import sse_entropy_report
from .transform import SseConfig, sse_encode

ALPHABET_BYTES = bytes(range(ord("A"), ord("Z") + 1)) + bytes(
    range(ord("a"), ord("z") + 1)
)

CSV_COLUMNS = (
    "alphabet_size",
    "source_mean",
    "source_min",
    "source_max",
    "target_mean",
    "target_min",
    "target_max",
    "ratio_mean",
)


@dataclass(frozen=True)
class StudyConfig:
    min_alphabet: int = 2
    max_alphabet: int = 52
    trials_per_size: int = 100
    lines_per_corpus: int = 2000
    min_line_len: int = 3
    max_line_len: int = 12
    seed: int = 1

    def __post_init__(self):
        if self.min_alphabet < 2:
            raise ValueError("alphabet sizes start at 2")
        if self.max_alphabet < self.min_alphabet:
            raise ValueError("empty alphabet size range")
        if self.max_alphabet > len(ALPHABET_BYTES):
            raise ValueError(f"at most {len(ALPHABET_BYTES)} alphabet characters")
        if self.trials_per_size < 1 or self.lines_per_corpus < 1:
            raise ValueError("trial and line counts must be at least 1")
        if not 1 <= self.min_line_len <= self.max_line_len:
            raise ValueError("line length range must satisfy 1 <= min <= max")


@dataclass(frozen=True)
class StudyRow:
    """Aggregates over all trials of one alphabet size, in bits per byte."""

    alphabet_size: int
    source_mean: float
    source_min: float
    source_max: float
    target_mean: float
    target_min: float
    target_max: float
    ratio_mean: float


def sample_probabilities(n: int, rng: random.Random) -> list[float]:
    """Draw n strictly positive probabilities, uniform on the simplex."""
    if n < 2:
        raise ValueError("need at least two symbols")
    draws = [rng.expovariate(1.0) for _ in range(n)]
    total = sum(draws)
    return [d / total for d in draws]


def generate_corpus(
    probs: Sequence[float], config: StudyConfig, rng: random.Random
) -> list[bytes]:
    """Synthesize lines with the given per-character probabilities."""
    population = ALPHABET_BYTES[: len(probs)]
    cum_weights = list(itertools.accumulate(probs))
    lines = []
    for _ in range(config.lines_per_corpus):
        length = rng.randint(config.min_line_len, config.max_line_len)
        lines.append(bytes(rng.choices(population, cum_weights=cum_weights, k=length)))
    return lines


def _trial_seed(master_seed: int, alphabet_size: int, trial: int) -> int:
    digest = hashlib.sha256(
        f"{master_seed}:{alphabet_size}:{trial}".encode("ascii")
    ).digest()
    return int.from_bytes(digest[:8], "big")


def run_trial(config: StudyConfig, alphabet_size: int, trial: int) -> tuple[float, float]:
    """One independent trial: (source entropy, transformed entropy)."""
    rng = random.Random(_trial_seed(config.seed, alphabet_size, trial))
    probs = sample_probabilities(alphabet_size, rng)
    lines = generate_corpus(probs, config, rng)
    sse_config = SseConfig()
    records = sse_encode(lines, sse_config)
    source = b"".join(line + b"\n" for line in sorted(lines))
    target = serialize_payload(records, ContainerHeader.from_config(sse_config))
    report = sse_entropy_report(source, target, sse_config.empty_symbol)
    assert report.formula_checks.all_hold()
    return report.source_entropy, report.target_entropy


def run_study(config: StudyConfig = StudyConfig()) -> list[StudyRow]:
    """Run all trials for all alphabet sizes and aggregate per size."""
    rows = []
    for size in range(config.min_alphabet, config.max_alphabet + 1):
        source_vals = []
        target_vals = []
        for trial in range(config.trials_per_size):
            h, h0 = run_trial(config, size, trial)
            source_vals.append(h)
            target_vals.append(h0)
        source_mean = sum(source_vals) / len(source_vals)
        target_mean = sum(target_vals) / len(target_vals)
        rows.append(
            StudyRow(
                alphabet_size=size,
                source_mean=source_mean,
                source_min=min(source_vals),
                source_max=max(source_vals),
                target_mean=target_mean,
                target_min=min(target_vals),
                target_max=max(target_vals),
                ratio_mean=target_mean / source_mean,
            )
        )
    return rows


def write_csv(rows: Sequence[StudyRow], config: StudyConfig, stream: TextIO) -> None:
    """Write rows as CSV, preceded by the config as a JSON comment line."""
    stream.write("# " + json.dumps(asdict(config), sort_keys=True) + "\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([getattr(row, col) for col in CSV_COLUMNS])
