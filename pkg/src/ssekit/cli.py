"""The ssekit command: encode, decode, analyze, simulate, bench, gen.

Machine-readable output goes to stdout: a JSON report for most commands,
CSV for simulate. Diagnostics go to stderr. When the payload itself
streams to stdout (path "-"), the JSON report moves to stderr so the two
never mix.

Exit codes:
    0  success
    2  alphabet violation (argparse usage errors also exit 2)
    3  file or stream I/O failure, including the --max-bytes guard
    4  container header errors (magic, version, flags)
    5  corrupt or malformed container payload
    6  external compressor failures (not found, nonzero exit, timeout)
"""

from __future__ import annotations

import argparse
import io
import json
import sys
import time
from pathlib import Path

from . import __version__, backend, corpus, simulate
from .container import HEADER_LEN, ContainerHeader, deserialize, serialize, serialize_payload
from .entropy import sse_entropy_report
from .errors import (
    AlphabetViolation,
    BadFlags,
    BadMagic,
    BadVersion,
    CorruptStream,
    IoError,
    MalformedLine,
    NonZeroExit,
    SseError,
    ToolNotFound,
    ToolTimeout,
    TruncatedPayload,
)
from .transform import (
    Collation,
    RunMode,
    SseConfig,
    choose_empty_symbol,
    sort_lines,
    sse_decode,
    sse_encode,
)

SCHEMA_VERSION = 1
DEFAULT_MAX_BYTES = 1 << 30

_EXIT_CODES = (
    (AlphabetViolation, 2),
    (IoError, 3),
    ((BadMagic, BadVersion, BadFlags), 4),
    ((CorruptStream, MalformedLine, TruncatedPayload), 5),
    ((ToolNotFound, NonZeroExit, ToolTimeout), 6),
)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except SseError as exc:
        print(f"ssekit {args.command}: {exc}", file=sys.stderr)
        if isinstance(exc, AlphabetViolation):
            print("hint: rerun with --empty auto", file=sys.stderr)
        for types, code in _EXIT_CODES:
            if isinstance(exc, types):
                return code
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssekit",
        description="Sort-and-set-empty preprocessing, analytics, and benchmarks "
        "for line-order-independent text.",
    )
    parser.add_argument("--version", action="version", version=f"ssekit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="transform a line file into an .sse container")
    p.add_argument("in_path", help='input line file, or "-" for stdin')
    p.add_argument("out_path", help='output container, or "-" for stdout')
    _add_transform_flags(p, mode_flag=True)
    p.set_defaults(handler=cmd_encode)

    p = sub.add_parser("decode", help="restore the sorted line file from a container")
    p.add_argument("in_path", help='input container, or "-" for stdin')
    p.add_argument("out_path", help='output line file, or "-" for stdout')
    p.set_defaults(handler=cmd_decode)

    p = sub.add_parser("analyze", help="entropy report for a file and its transform")
    p.add_argument("in_path", help='input line file, or "-" for stdin')
    _add_transform_flags(p, mode_flag=False)
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("simulate", help="random-alphabet entropy study, CSV output")
    p.add_argument("--sizes", default="2..52", metavar="A..B",
                   help="alphabet size range (default 2..52)")
    p.add_argument("--trials", type=int, default=100, help="trials per size")
    p.add_argument("--lines", type=int, default=2000, help="lines per corpus")
    p.add_argument("--seed", type=int, default=1, help="master seed")
    p.add_argument("--out", default="-", metavar="CSV",
                   help='CSV output path, or "-" for stdout (default)')
    p.add_argument("--plot", metavar="DIR",
                   help="also render study figures into this directory")
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("bench", help="compare compression with and without SSE")
    p.add_argument("corpus_path", nargs="?",
                   help="line file to benchmark (or use --gen)")
    p.add_argument("--gen", metavar="FAMILY:COUNT:SEED",
                   help="benchmark a generated corpus (word|url|hex)")
    p.add_argument("--codec", default="builtin", metavar="CODEC",
                   help='"builtin" or cmd:"TEMPLATE with {in} and {out}"')
    p.add_argument("--timeout", type=float, default=backend.DEFAULT_TOOL_TIMEOUT,
                   help="external tool time budget in seconds")
    p.add_argument("--empty", default="0x20", metavar="auto|0xNN",
                   help="empty symbol (default 0x20)")
    p.add_argument("--crlf", action="store_true", help="strip one trailing CR per line")
    p.add_argument("--plot", metavar="PNG", help="also render a ratio bar chart")
    p.set_defaults(handler=cmd_bench)

    p = sub.add_parser("gen", help="write a deterministic synthetic corpus")
    p.add_argument("spec", metavar="FAMILY:COUNT:SEED",
                   help="corpus spec, families word|url|hex")
    p.add_argument("--out", default="-", help='output path, or "-" for stdout (default)')
    p.set_defaults(handler=cmd_gen)

    return parser


def _add_transform_flags(p: argparse.ArgumentParser, mode_flag: bool) -> None:
    p.add_argument("--empty", default="0x20", metavar="auto|0xNN",
                   help="empty symbol byte, or auto to pick one (default 0x20)")
    if mode_flag:
        p.add_argument("--mode", choices=["literal", "counted"], default="literal",
                       help="empty-run representation (default literal)")
    p.add_argument("--ci-sort", action="store_true",
                   help="case-insensitive sort key (stored bytes unchanged)")
    p.add_argument("--crlf", action="store_true",
                   help="strip one trailing CR per line on input")
    p.add_argument("--max-bytes", type=int, default=DEFAULT_MAX_BYTES,
                   help="refuse inputs larger than this (default 1 GiB)")


# ---------------------------------------------------------------------------
# command handlers


def cmd_encode(args) -> int:
    started = time.monotonic()
    data = _read_bytes(args.in_path, args.max_bytes)
    lines = corpus.split_lines(data, args.crlf)
    config = _make_config(args, lines)
    records = sse_encode(lines, config)
    blob = serialize(records, ContainerHeader.from_config(config))
    _write_bytes(args.out_path, blob)
    _emit_report(
        command="encode",
        inputs=[_input_info(args.in_path, len(data))],
        config=_config_echo(config, crlf=args.crlf),
        results={
            "lines": len(lines),
            "container_bytes": len(blob),
            "payload_bytes": len(blob) - HEADER_LEN,
            "out_path": args.out_path,
        },
        started=started,
        to_stderr=args.out_path == "-",
    )
    return 0


def cmd_decode(args) -> int:
    started = time.monotonic()
    data = _read_bytes(args.in_path, None)
    header, records = deserialize(data)
    lines = sse_decode(records, header.to_config())
    out = b"".join(line + b"\n" for line in lines)
    _write_bytes(args.out_path, out)
    _emit_report(
        command="decode",
        inputs=[_input_info(args.in_path, len(data))],
        config=_config_echo(header.to_config()),
        results={"lines": len(lines), "output_bytes": len(out), "out_path": args.out_path},
        started=started,
        to_stderr=args.out_path == "-",
    )
    return 0


def cmd_analyze(args) -> int:
    started = time.monotonic()
    data = _read_bytes(args.in_path, args.max_bytes)
    lines = corpus.split_lines(data, args.crlf)
    config = _make_config(args, lines, force_literal=True)
    records = sse_encode(lines, config)
    source = b"".join(line + b"\n" for line in sort_lines(lines, config.collation))
    target = serialize_payload(records, ContainerHeader.from_config(config))
    report = sse_entropy_report(source, target, config.empty_symbol)
    _emit_report(
        command="analyze",
        inputs=[_input_info(args.in_path, len(data))],
        config=_config_echo(config, crlf=args.crlf),
        results=report.to_dict(),
        started=started,
    )
    return 0


def cmd_simulate(args) -> int:
    started = time.monotonic()
    low, high = _parse_sizes(args.sizes)
    config = simulate.StudyConfig(
        min_alphabet=low,
        max_alphabet=high,
        trials_per_size=args.trials,
        lines_per_corpus=args.lines,
        seed=args.seed,
    )
    rows = simulate.run_study(config)
    buffer = io.StringIO()
    simulate.write_csv(rows, config, buffer)
    _write_bytes(args.out, buffer.getvalue().encode("ascii"))
    figures = []
    if args.plot:
        from . import plots

        figures = [str(p) for p in plots.plot_study(rows, Path(args.plot))]
    _emit_report(
        command="simulate",
        inputs=[],
        config={"sizes": f"{low}..{high}", "trials": args.trials,
                "lines": args.lines, "seed": args.seed},
        results={"rows": len(rows), "out_path": args.out, "figures": figures},
        started=started,
        to_stderr=args.out == "-",
    )
    return 0


def cmd_bench(args) -> int:
    started = time.monotonic()
    lines, source_desc, input_bytes = _bench_corpus(args)
    empty = _parse_empty(args.empty, lines)
    config = SseConfig(empty_symbol=empty)
    codec, codec_desc = _parse_codec(args)

    records = sse_encode(lines, config)
    source = b"".join(line + b"\n" for line in sort_lines(lines, config.collation))
    target = serialize_payload(records, ContainerHeader.from_config(config))
    entropy_report = sse_entropy_report(source, target, config.empty_symbol)
    pipeline = backend.measure_pipeline(lines, config, codec)

    results = {
        "corpus": source_desc,
        "lines": len(lines),
        "codec": codec_desc,
        "entropy": {
            "source_ratio": entropy_report.source_ratio,
            "sse_ratio": entropy_report.target_ratio,
            "ratio_of_ratios": entropy_report.target_ratio / entropy_report.source_ratio,
        },
        "actual": pipeline.to_dict(),
    }
    if args.plot:
        from . import plots

        results["figure"] = str(plots.plot_bench(results, Path(args.plot)))
    _emit_report(
        command="bench",
        inputs=[_input_info(args.corpus_path, input_bytes)] if args.corpus_path else [],
        config=_config_echo(config, crlf=args.crlf),
        results=results,
        started=started,
    )
    return 0


def cmd_gen(args) -> int:
    started = time.monotonic()
    spec = _parse_gen(args.spec)
    lines = corpus.generate(spec)
    out = b"".join(line + b"\n" for line in lines)
    _write_bytes(args.out, out)
    _emit_report(
        command="gen",
        inputs=[],
        config={"family": spec.family.value, "count": spec.count, "seed": spec.seed},
        results={"lines": len(lines), "bytes": len(out), "out_path": args.out},
        started=started,
        to_stderr=args.out == "-",
    )
    return 0


# ---------------------------------------------------------------------------
# shared plumbing


def _read_bytes(path: str, max_bytes: int | None) -> bytes:
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            data = Path(path).read_bytes()
    except OSError as exc:
        raise IoError(f"cannot read {path!r}: {exc}") from exc
    if max_bytes is not None and len(data) > max_bytes:
        raise IoError(f"input {path!r} has {len(data)} bytes, over the "
                      f"--max-bytes limit of {max_bytes}")
    return data


def _write_bytes(path: str, data: bytes) -> None:
    try:
        if path == "-":
            sys.stdout.buffer.write(data)
            sys.stdout.buffer.flush()
        else:
            Path(path).write_bytes(data)
    except OSError as exc:
        raise IoError(f"cannot write {path!r}: {exc}") from exc


def _input_info(path: str, size: int) -> dict:
    return {"path": path, "bytes": size}


def _make_config(args, lines, force_literal: bool = False) -> SseConfig:
    empty = _parse_empty(args.empty, lines)
    mode = RunMode.LITERAL
    if not force_literal and getattr(args, "mode", "literal") == "counted":
        mode = RunMode.COUNTED
    collation = Collation.CASE_INSENSITIVE if args.ci_sort else Collation.BYTEWISE
    return SseConfig(empty_symbol=empty, run_mode=mode, collation=collation)


def _parse_empty(text: str, lines) -> int:
    if text == "auto":
        return choose_empty_symbol(lines)
    try:
        value = int(text, 0)
    except ValueError:
        raise IoError(f"--empty expects auto, 0xNN, or a decimal byte, got {text!r}")
    if not 0 <= value <= 0xFF:
        raise IoError(f"--empty value {text!r} is not a byte")
    return value


def _parse_sizes(text: str) -> tuple[int, int]:
    try:
        low, high = text.split("..")
        return int(low), int(high)
    except ValueError:
        raise IoError(f"--sizes expects A..B, got {text!r}")


def _parse_gen(text: str) -> corpus.CorpusSpec:
    try:
        family, count, seed = text.split(":")
        return corpus.CorpusSpec(corpus.Family(family), int(count), int(seed))
    except ValueError:
        raise IoError(
            f"corpus spec must be FAMILY:COUNT:SEED with family word|url|hex, got {text!r}"
        )


def _bench_corpus(args) -> tuple[list[bytes], dict, int]:
    if (args.corpus_path is None) == (args.gen is None):
        raise IoError("bench needs exactly one of corpus_path or --gen")
    if args.gen:
        spec = _parse_gen(args.gen)
        lines = corpus.generate(spec)
        desc = {"generated": args.gen}
        size = sum(len(line) + 1 for line in lines)
    else:
        data = _read_bytes(args.corpus_path, None)
        lines = corpus.split_lines(data, args.crlf)
        desc = {"path": args.corpus_path}
        size = len(data)
    return lines, desc, size


def _parse_codec(args) -> tuple[backend.Codec, str]:
    if args.codec == "builtin":
        return backend.builtin_codec, "builtin"
    if args.codec.startswith("cmd:"):
        template = args.codec[len("cmd:"):]
        return backend.make_external_codec(template, args.timeout), template
    raise IoError(f'--codec expects "builtin" or cmd:"TEMPLATE", got {args.codec!r}')


def _config_echo(config: SseConfig, crlf: bool | None = None) -> dict:
    echo = {
        "empty_symbol": config.empty_symbol,
        "run_mode": config.run_mode.value,
        "collation": config.collation.value,
    }
    if crlf is not None:
        echo["crlf"] = crlf
    return echo


def _emit_report(command, inputs, config, results, started, to_stderr=False) -> None:
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "config": config,
        "results": results,
        "elapsed_ms": round((time.monotonic() - started) * 1000.0, 3),
    }
    stream = sys.stderr if to_stderr else sys.stdout
    json.dump(report, stream)
    stream.write("\n")
    stream.flush()


if __name__ == "__main__":
    sys.exit(main())
