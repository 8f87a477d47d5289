from argparse import ArgumentParser
from typing import Any, Dict

from ..io import OUTPUT_FORMATS
from ._commands import PIE_SUBCOMMANDS
from ._verify import SUITES

__all__ = ("build_parser", "config_overrides",)


def _common_options() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    group = common.add_argument_group("common options")
    group.add_argument("--config", metavar="PATH",
                       help="YAML file overriding the built-in defaults; flags override it")
    group.add_argument("--input", dest="input_path", metavar="PATH",
                       help="Quiver file in JSON or YAML")
    group.add_argument("--seed", type=int, help="Seed of the randomized verify suites")
    group.add_argument("--cap", type=int, help="Largest number of subquiver candidates")
    group.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS,
                       help="Report format on stdout")
    group.add_argument("-v", "--verbose", dest="verbosity", action="count",
                       help="Log debug messages on stderr")
    return common


def build_parser() -> ArgumentParser:
    """
    Build the argument parser; common options are accepted after every command.

    :return: A parser whose namespace carries ``command`` and, for ``pie``,
        ``subcommand``.
    """
    common = _common_options()
    parser = ArgumentParser(prog="quiver-rings",
                            description="Exact computations in representation rings of "
                                        "acyclic quivers.")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    paths = commands.add_parser("paths", parents=[common], help="List the paths from x to y")
    paths.add_argument("x")
    paths.add_argument("y")

    tensor = commands.add_parser("tensor-proj", parents=[common],
                                 help="Decompose P(x) ⊗ P(y) into projectives")
    tensor.add_argument("x")
    tensor.add_argument("y")
    tensor.add_argument("--injective", action="store_true",
                        help="Decompose I(x) ⊗ I(y) into injectives instead")

    pie = commands.add_parser("pie", help="Report on the PIE category")
    pie_commands = pie.add_subparsers(dest="subcommand", metavar="SUBCOMMAND", required=True)
    for name in PIE_SUBCOMMANDS:
        sub = pie_commands.add_parser(name, parents=[common])
        if name in ("realize", "product"):
            sub.add_argument("x", help="Object name, e.g. P_Q")
        if name == "product":
            sub.add_argument("y", help="Object name, e.g. I_Q")

    commands.add_parser("linearize", parents=[common],
                        help="Linearize the quiver over Q given by --input")

    verify = commands.add_parser("verify", parents=[common], help="Run the oracle suites")
    verify.add_argument("--suite", dest="suites", action="append", choices=tuple(SUITES),
                        help="Suite to run; repeatable; all suites when omitted")
    verify.add_argument("--random", action="store_true",
                        help="Use seeded random quivers even when --input is given")
    return parser


def config_overrides(args: Any) -> Dict[str, Any]:
    keys = ("input_path", "seed", "cap", "output_format", "verbosity", "suites")
    return {key: getattr(args, key, None) for key in keys}
