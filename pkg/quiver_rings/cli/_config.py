import dataclasses
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

import yaml

from .._errors import InvalidInputError
from ..core import DEFAULT_SUBQUIVER_CAP
from ..io import OUTPUT_FORMATS

__all__ = ("RunConfig", "load_config_file",)


@dataclass(frozen=True)
class RunConfig:
    # Quiver file (JSON or YAML) the command works on
    # verify falls back to seeded random quivers when it is None
    input_path: Optional[str] = None

    # Largest number of subquiver candidates examined before giving up
    # Enumeration is exponential in the arrow count and fails loudly past this bound
    cap: int = DEFAULT_SUBQUIVER_CAP

    # Seed of every randomized verify suite
    # Identical (input, flags, seed) produce byte-identical output
    seed: int = 0

    # Report format on stdout: text, json or yaml
    output_format: str = "text"

    # Random acyclic quivers checked by the cartan, clebsch-gordan and paths suites
    cartan_samples: int = 100
    cartan_max_vertices: int = 6
    cartan_max_arrows: int = 10

    # Random pairs of connected wrappings checked by the linearization suite
    wrapping_pairs: int = 50
    wrapping_max_base_vertices: int = 4
    wrapping_max_base_arrows: int = 6
    wrapping_max_total_vertices: int = 8

    # Random bases whose PIE categories are checked exhaustively
    pie_samples: int = 20
    pie_max_vertices: int = 4
    pie_max_arrows: int = 4

    # Verify suites to run; empty means all of them
    suites: Tuple[str, ...] = ()

    # 0 logs warnings only, 1 and above logs debug messages
    verbosity: int = 0

    def __post_init__(self) -> None:
        if self.output_format not in OUTPUT_FORMATS:
            raise InvalidInputError(
                f"unknown output format {self.output_format!r}, "
                f"expected one of {', '.join(OUTPUT_FORMATS)}")
        if self.cap < 1:
            raise InvalidInputError("cap must be positive")

    def merged(self, overrides: Mapping[str, Any]) -> "RunConfig":
        """
        Return a copy with ``overrides`` applied; ``None`` values are ignored.

        :param overrides: Field names and new values.
        :return: The updated config.
        :raises InvalidInputError: If a key names no field.
        """
        fields = {f.name for f in dataclasses.fields(self)}
        unknown = sorted(set(overrides) - fields)
        if unknown:
            raise InvalidInputError(f"unknown config keys: {', '.join(unknown)}")
        changes: Dict[str, Any] = {k: v for k, v in overrides.items() if v is not None}
        if "suites" in changes:
            changes["suites"] = tuple(changes["suites"])
        return dataclasses.replace(self, **changes)


def load_config_file(file_path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read config overrides from a YAML mapping.

    :param file_path: Path to the YAML file.
    :return: The overrides, keyed by ``RunConfig`` field name.
    :raises InvalidInputError: If the file cannot be read or is not a mapping.
    """
    try:
        payload = yaml.safe_load(Path(file_path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InvalidInputError(f"cannot read {file_path}: {exc.strerror}") from None
    except yaml.YAMLError as exc:
        raise InvalidInputError(f"cannot parse {file_path}: {exc}") from None
    if payload is None:
        return {}
    if not isinstance(payload, dict):
        raise InvalidInputError(f"{file_path} must contain a mapping")
    return {str(k).replace("-", "_"): v for k, v in payload.items()}
