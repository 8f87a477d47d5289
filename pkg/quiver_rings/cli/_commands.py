from typing import Any, Dict, Optional

from .._errors import InvalidInputError
from ..core import Quiver, enumerate_paths
from ..io import ReportBuilder, schema
from ..linearize import linearization
from ..over_q import QuiverOverQ
from ..pie import build_pie, structure_constants
from ..projectives import tensor_injectives, tensor_projectives
from ._config import RunConfig
from ._verify import SUITES, VerifyContext, run_suites

__all__ = ("cmd_paths", "cmd_tensor_proj", "cmd_pie", "cmd_linearize", "cmd_verify",
           "PIE_SUBCOMMANDS",)

PIE_SUBCOMMANDS = ("list", "homs", "mobius", "idempotents", "realize", "product")

_builder = ReportBuilder()


def cmd_paths(quiver: Quiver, x: str, y: str) -> schema.PathsReport:
    """
    List every path from ``x`` to ``y``.

    :raises CyclicQuiverError: If the quiver has a directed cycle.
    :raises InvalidQuiverError: If a vertex is unknown.
    """
    return _builder.build_paths(x, y, enumerate_paths(quiver, x, y))


def cmd_tensor_proj(quiver: Quiver, x: str, y: str,
                    injective: bool = False) -> schema.TensorReport:
    """
    Decompose ``P(x) ⊗ P(y)``, or ``I(x) ⊗ I(y)`` when ``injective`` is set.
    """
    if injective:
        return _builder.build_tensor(quiver, "I", x, y, tensor_injectives(quiver, x, y))
    return _builder.build_tensor(quiver, "P", x, y, tensor_projectives(quiver, x, y))


def cmd_pie(quiver: Quiver, config: RunConfig, subcommand: str,
            x: str = "", y: str = "") -> Dict[str, Any]:
    """
    Build the PIE category of ``quiver`` and report on it.

    :param quiver: An acyclic quiver.
    :param config: Supplies the subquiver cap.
    :param subcommand: One of ``PIE_SUBCOMMANDS``.
    :param x: First object name, for ``realize`` and ``product``.
    :param y: Second object name, for ``product``.
    :return: The report payload.
    :raises InvalidInputError: On an unknown subcommand or object name.
    :raises CapExceededError: If the quiver has too many arrow subsets.
    """
    if subcommand not in PIE_SUBCOMMANDS:
        raise InvalidInputError(f"unknown pie subcommand {subcommand!r}")
    category = build_pie(quiver, config.cap)
    names = [obj.name for obj in category.objects]
    if subcommand == "list":
        return dict(_builder.build_pie_list(category))
    if subcommand == "homs":
        return dict(_builder.build_matrix("pie homs", names, category.data.hom_counts))
    if subcommand == "mobius":
        return dict(_builder.build_matrix("pie mobius", names, category.data.moebius))
    if subcommand == "idempotents":
        return dict(_builder.build_idempotents(category))
    if subcommand == "realize":
        return dict(_builder.build_realization(category.object(x)))
    left, right = category.object(x), category.object(y)
    components = structure_constants(category, left, right)
    return dict(_builder.build_product(category, left, right, components))


def cmd_linearize(x: QuiverOverQ) -> schema.LinearizationReport:
    """
    Linearize a quiver over Q: one basis vector per vertex, one matrix unit per arrow.
    """
    return _builder.build_linearization(linearization(x))


def cmd_verify(config: RunConfig, quiver: Optional[Quiver] = None) -> schema.VerifyReport:
    """
    Run the verify suites named in ``config`` on ``quiver`` or on seeded random samples.

    :raises InvalidInputError: If a suite name is unknown.
    """
    unknown = [name for name in config.suites if name not in SUITES]
    if unknown:
        raise InvalidInputError(f"unknown suites: {', '.join(unknown)}")
    context = VerifyContext(config, quiver)
    return _builder.build_verify(config.seed, run_suites(context, config.suites))
