"""Downstream compression stage: built-in codec, external tools, pipelines.

The built-in order-0 Huffman codec makes ratio measurements hermetic; the
external adapter shells out to any installed compressor (an LZMA tool,
gzip, ...) through a command template with "{in}" and "{out}" placeholders
so real-world dictionary coders can be compared. `measure_pipeline` runs
both arms of the comparison: the raw sorted text versus the transformed
payload, same codec and settings on each side, so the only difference
between the arms is the transform itself.
"""

from __future__ import annotations

import shlex
import shutil
import subprocess
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .container import ContainerHeader, serialize_payload
from .errors import NonZeroExit, ToolNotFound, ToolTimeout
from .huffman import huffman_decode, huffman_encode
from .transform import SseConfig, sort_lines, sse_encode

__all__ = [
    "CodecResult",
    "PipelineResult",
    "builtin_codec",
    "external_compress",
    "make_external_codec",
    "huffman_encode",
    "huffman_decode",
    "measure_pipeline",
]

DEFAULT_TOOL_TIMEOUT = 300.0

#: A codec takes raw bytes and reports the sizes of its compressed form.
Codec = Callable[[bytes], "CodecResult"]


@dataclass(frozen=True)
class CodecResult:
    """Exact byte counts for one compression run; ratio = compressed/original."""

    original_size: int
    compressed_size: int
    ratio: float

    @classmethod
    def of(cls, original_size: int, compressed_size: int) -> "CodecResult":
        return cls(original_size, compressed_size, compressed_size / original_size)

    def to_dict(self) -> dict:
        return {
            "original_size": self.original_size,
            "compressed_size": self.compressed_size,
            "ratio": self.ratio,
        }


def builtin_codec(data: bytes) -> CodecResult:
    """Measure the built-in Huffman codec on data."""
    return CodecResult.of(len(data), len(huffman_encode(data)))


def external_compress(
    command_template: str, input_data: bytes, timeout: float = DEFAULT_TOOL_TIMEOUT
) -> CodecResult:
    """Run an external compressor over input_data and measure its output file.

    The template is split shell-style, then "{in}" and "{out}" inside each
    token are replaced with temporary file paths. The tool must exit 0 and
    create the output file; its size is the measurement (tool output text
    is never parsed). Temporary files are deleted on success and kept for
    inspection on failure, with their location in the raised error.
    """
    tokens = shlex.split(command_template)
    if not any("{in}" in t for t in tokens) or not any("{out}" in t for t in tokens):
        raise ValueError("command template must use both {in} and {out}")

    workdir = Path(tempfile.mkdtemp(prefix="ssekit-bench-"))
    in_path = workdir / "input.bin"
    out_path = workdir / "output.bin"
    in_path.write_bytes(input_data)
    argv = [t.replace("{in}", str(in_path)).replace("{out}", str(out_path)) for t in tokens]

    try:
        proc = subprocess.run(argv, capture_output=True, timeout=timeout)
    except FileNotFoundError as exc:
        raise ToolNotFound(f"cannot launch {argv[0]!r} (files kept in {workdir})") from exc
    except subprocess.TimeoutExpired as exc:
        raise ToolTimeout(
            f"{argv[0]!r} exceeded {timeout:g}s (files kept in {workdir})"
        ) from exc
    if proc.returncode != 0:
        stderr = proc.stderr.decode(errors="replace").strip()
        raise NonZeroExit(
            f"{argv[0]!r} exited {proc.returncode}: {stderr[:500]} "
            f"(files kept in {workdir})"
        )
    if not out_path.exists():
        raise NonZeroExit(
            f"{argv[0]!r} exited 0 but wrote no output (files kept in {workdir})"
        )
    result = CodecResult.of(len(input_data), out_path.stat().st_size)
    shutil.rmtree(workdir)
    return result


def make_external_codec(
    command_template: str, timeout: float = DEFAULT_TOOL_TIMEOUT
) -> Codec:
    """Bind a command template into a Codec usable by measure_pipeline."""

    def codec(data: bytes) -> CodecResult:
        return external_compress(command_template, data, timeout)

    return codec


@dataclass(frozen=True)
class PipelineResult:
    """Both arms of the comparison plus their quotient (< 1 = transform helped)."""

    source: CodecResult
    sse: CodecResult
    ratio_of_ratios: float

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "sse": self.sse.to_dict(),
            "ratio_of_ratios": self.ratio_of_ratios,
        }


def measure_pipeline(
    lines: Sequence[bytes], config: SseConfig, codec: Codec
) -> PipelineResult:
    """Compress the sorted raw text and its transformed payload with one codec.

    The transformed arm is the container payload without the 7-byte header
    (format overhead, not transform output). Both arms see byte-identical
    codec settings.
    """
    source_text = b"".join(line + b"\n" for line in sort_lines(lines, config.collation))
    records = sse_encode(lines, config)
    payload = serialize_payload(records, ContainerHeader.from_config(config))
    source_result = codec(source_text)
    sse_result = codec(payload)
    return PipelineResult(
        source=source_result,
        sse=sse_result,
        ratio_of_ratios=sse_result.ratio / source_result.ratio,
    )
