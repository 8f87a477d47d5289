import logging
import sys
from typing import Any, Dict, Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler

from .._errors import InvalidInputError, QuiverRingsError
from ..io import QuiverReader, ReportView, dump_report
from ._arguments import build_parser, config_overrides
from ._commands import cmd_linearize, cmd_paths, cmd_pie, cmd_tensor_proj, cmd_verify
from ._config import RunConfig, load_config_file

__all__ = ("main", "run",)

logger = logging.getLogger("quiver_rings")

VERIFY_FAILED_EXIT_CODE = 4


def _configure_logging(verbosity: int) -> None:
    handler = RichHandler(console=Console(stderr=True), show_time=False, show_path=False)
    logging.basicConfig(level=logging.DEBUG if verbosity else logging.WARNING,
                        format="%(message)s", handlers=[handler], force=True)


def run(config: RunConfig, args: Any) -> Dict[str, Any]:
    """
    Execute the parsed command.

    :param config: Settings after defaults, config file and flags are merged.
    :param args: The parsed namespace, for positional arguments.
    :return: The report payload.
    """
    reader = QuiverReader()
    if args.command == "verify":
        quiver = None
        if config.input_path is not None and not args.random:
            quiver = reader.read(config.input_path)
        return dict(cmd_verify(config, quiver))

    if config.input_path is None:
        raise InvalidInputError(f"{args.command} needs --input")
    if args.command == "linearize":
        return dict(cmd_linearize(reader.read_over_q(config.input_path)))
    quiver = reader.read(config.input_path)
    if args.command == "paths":
        return dict(cmd_paths(quiver, args.x, args.y))
    if args.command == "tensor-proj":
        return dict(cmd_tensor_proj(quiver, args.x, args.y, args.injective))
    return cmd_pie(quiver, config, args.subcommand,
                   getattr(args, "x", ""), getattr(args, "y", ""))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Command-line entry point.

    Reports go to stdout, diagnostics to stderr. Exit codes: 0 on success, 2 on invalid
    input, 3 when the enumeration cap is exceeded, 4 when an internal invariant is
    violated or a verify suite fails.

    :param argv: Arguments without the program name; ``sys.argv[1:]`` when omitted.
    :return: The exit code.
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbosity or 0)
    try:
        config = RunConfig()
        if args.config is not None:
            config = config.merged(load_config_file(args.config))
        config = config.merged(config_overrides(args))
        report = run(config, args)
    except QuiverRingsError as error:
        logger.error("%s", error)
        return error.exit_code

    if config.output_format == "text":
        Console(highlight=False).print(ReportView(report), soft_wrap=True)
    else:
        sys.stdout.write(dump_report(report, config.output_format))
    if report["command"] == "verify" and not report["passed"]:
        return VERIFY_FAILED_EXIT_CODE
    return 0
