"""ssekit: sort-and-set-empty preprocessing for line-order-independent text.

The transform sorts a text's lines and replaces each line's shared prefix
with its predecessor by placeholder bytes, which concentrates probability
mass on one symbol and lowers order-0 entropy on prefix-heavy inputs.
Submodules: transform (the codec core), container (the .sse file format),
entropy (histograms and ratio accounting), theory (analytic facts about
the entropy term), simulate (Monte Carlo study), huffman/backend (built-in
and external compressors), corpus (line ingestion and synthetic corpora),
plots (figure rendering), cli (the ssekit command).
"""

from .backend import (
    CodecResult,
    PipelineResult,
    builtin_codec,
    external_compress,
    huffman_decode,
    huffman_encode,
    make_external_codec,
    measure_pipeline,
)
from .container import ContainerHeader, deserialize, serialize, serialize_payload
from .corpus import CorpusSpec, Family, generate, read_lines, split_lines
from .entropy import (
    ByteHistogram,
    EntropyReport,
    compression_ratio,
    histogram,
    shannon_entropy,
    sse_entropy_report,
)
from .errors import SseError
from .simulate import StudyConfig, StudyRow, run_study, write_csv
from .theory import two_symbol_counterexample, y
from .transform import (
    Collation,
    RunMode,
    SseConfig,
    TransformedLine,
    choose_empty_symbol,
    common_prefix_len,
    sort_lines,
    sse_decode,
    sse_encode,
    validate_alphabet,
)

__version__ = "0.1.0"

__all__ = [
    "ByteHistogram",
    "CodecResult",
    "Collation",
    "ContainerHeader",
    "CorpusSpec",
    "EntropyReport",
    "Family",
    "PipelineResult",
    "RunMode",
    "SseConfig",
    "SseError",
    "StudyConfig",
    "StudyRow",
    "TransformedLine",
    "builtin_codec",
    "choose_empty_symbol",
    "common_prefix_len",
    "compression_ratio",
    "deserialize",
    "external_compress",
    "generate",
    "histogram",
    "huffman_decode",
    "huffman_encode",
    "make_external_codec",
    "measure_pipeline",
    "read_lines",
    "run_study",
    "serialize",
    "serialize_payload",
    "shannon_entropy",
    "sort_lines",
    "split_lines",
    "sse_decode",
    "sse_encode",
    "sse_entropy_report",
    "two_symbol_counterexample",
    "validate_alphabet",
    "write_csv",
    "y",
    "__version__",
]
