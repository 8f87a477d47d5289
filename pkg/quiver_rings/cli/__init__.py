from ._arguments import build_parser, config_overrides
from ._commands import (
    PIE_SUBCOMMANDS,
    cmd_linearize,
    cmd_paths,
    cmd_pie,
    cmd_tensor_proj,
    cmd_verify,
)
from ._config import RunConfig, load_config_file
from ._main import main, run
from ._random import random_acyclic_quiver, random_wrapping
from ._verify import (
    EXAMPLE_IDEMPOTENTS,
    KNOWN_MISPRINTS,
    SUITES,
    VerifyContext,
    check_moebius,
    example_quiver,
    run_suites,
)

__all__ = ("main", "run", "build_parser", "config_overrides", "RunConfig", "load_config_file",
           "cmd_paths", "cmd_tensor_proj", "cmd_pie", "cmd_linearize", "cmd_verify",
           "PIE_SUBCOMMANDS", "random_acyclic_quiver", "random_wrapping", "SUITES",
           "VerifyContext", "check_moebius", "example_quiver", "run_suites",
           "EXAMPLE_IDEMPOTENTS", "KNOWN_MISPRINTS",)
