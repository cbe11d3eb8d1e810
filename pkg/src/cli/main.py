import argparse
import logging
import sys
from pathlib import Path

from prometheus_client import REGISTRY, write_to_textfile

from src.cli.schemas import GATE_KINDS, STATE_KINDS, Document, dump_document, parse_document
from src.cli.services import BENCH_TASKS, Benchmark, Converter, InstanceGenerator, VerificationRejectedError, Verifier, parse_range
from src.utils import settings

logger: logging.Logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_REJECTED = 3
EXIT_ORACLE_DISAGREEMENT = 4


def _read_document(path: str) -> Document:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_document(text)


def cmd_convert(args: argparse.Namespace) -> int:
    document = _read_document(args.file)
    print(dump_document(Converter.convert(document, args.to)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    document = _read_document(args.file)
    report = Verifier.verify(document, use_oracle=args.oracle)
    print(report.model_dump_json(indent=2, exclude_none=True))

    if report.oracle_agrees is False: return EXIT_ORACLE_DISAGREEMENT
    if report.verdict == "rejected":
        logger.warning(f"Rejected: {report.failure_reason} (witness {report.witness})")
        return EXIT_REJECTED
    return EXIT_OK


def cmd_random(args: argparse.Namespace) -> int:
    document = InstanceGenerator.random_document(args.kind, args.n, args.seed, depth=args.depth, emit=args.emit)
    print(dump_document(document))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    table = Benchmark.run(args.task, parse_range(args.n), repeats=args.repeats)
    print(Benchmark.render(table, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stabtool", description="Convert and verify stabiliser states and Clifford gates")
    parser.add_argument("--log-level", default=None, help=f"Logging level (default {settings.LOG_LEVEL})")
    parser.add_argument("--metrics-file", default=None, help="Write Prometheus metrics to this file on exit")
    subparsers = parser.add_subparsers(dest="command", required=True)

    convert = subparsers.add_parser("convert", help="Convert a document to another representation")
    convert.add_argument("--to", required=True, choices=STATE_KINDS + GATE_KINDS, help="Target kind")
    convert.add_argument("file", help="Input document, or - for stdin")
    convert.set_defaults(handler=cmd_convert)

    verify = subparsers.add_parser("verify", help="Verify an amplitude vector or a dense matrix")
    verify.add_argument("--oracle", action="store_true", help="Cross-check with the brute-force oracle")
    verify.add_argument("file", help="Input document, or - for stdin")
    verify.set_defaults(handler=cmd_verify)

    random = subparsers.add_parser("random", help="Generate a seeded random instance")
    random.add_argument("--kind", required=True, choices=["state", "gate"])
    random.add_argument("-n", type=int, required=True, help="Qubit count")
    random.add_argument("--seed", type=int, required=True)
    random.add_argument("--depth", type=int, default=None, help=f"Circuit depth (default {settings.RANDOM_DEPTH_PER_QUBIT}·n)")
    random.add_argument("--emit", choices=STATE_KINDS + GATE_KINDS, default=None, help="Output kind")
    random.set_defaults(handler=cmd_random)

    bench = subparsers.add_parser("bench", help="Time fast paths against brute-force baselines")
    bench.add_argument("--task", required=True, choices=list(BENCH_TASKS))
    bench.add_argument("--n", required=True, help="Qubit range <lo>..<hi>")
    bench.add_argument("--repeats", type=int, default=None, help=f"Timed repeats per point (default {settings.BENCH_REPEATS})")
    bench.add_argument("--format", choices=["text", "csv"], default="text")
    bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    """
    Entry point of the stabtool command.

    Returns:
        0 success or acceptance, 2 malformed input, 3 verification rejection, 4 oracle disagreement
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=(args.log_level or settings.LOG_LEVEL).upper(), format='%(asctime)s - %(name)s - %(levelname)s - %(message)s', stream=sys.stderr, force=True)

    try:
        return args.handler(args)
    except VerificationRejectedError as e:
        logger.error(str(e))
        return EXIT_REJECTED
    except (ValueError, OSError) as e:
        # pydantic.ValidationError is a ValueError
        logger.error(f"Invalid input: {e}")
        return EXIT_INVALID_INPUT
    finally:
        if args.metrics_file: write_to_textfile(args.metrics_file, REGISTRY)
