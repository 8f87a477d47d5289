import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Union, cast

import yaml

from .._errors import BaseMismatchError, InvalidInputError, InvalidQuiverError
from ..core import Arrow, Quiver, validate
from ..over_q import QuiverOverQ
from . import schema

__all__ = ("QuiverReader", "dump_quiver", "dump_over_q",)

YAML_SUFFIXES = (".yaml", ".yml")


class QuiverReader:
    """
    Reads quivers and quivers over a base from JSON or YAML files.

    Files ending in ``.yaml`` or ``.yml`` are parsed as YAML, anything else as JSON.
    Parsed quivers are validated and any violation is raised.
    """

    def read(self, file_path: Union[str, Path]) -> Quiver:
        """
        Read and validate a quiver file.

        :param file_path: Path to a JSON or YAML quiver document.
        :return: The quiver, arrows and vertices in file order.
        :raises InvalidInputError: If the file is missing or not a quiver document.
        :raises InvalidQuiverError: If the quiver breaks an identifier or endpoint rule.
        """
        return self.parse_quiver(self._load(Path(file_path)))

    def read_over_q(self, file_path: Union[str, Path],
                    base: Optional[Quiver] = None) -> QuiverOverQ:
        """
        Read a quiver over Q: a document with ``base``, ``total``, ``vertexLabel`` and
        ``arrowLabel``.

        :param file_path: Path to a JSON or YAML document.
        :param base: Expected base quiver; the document's own base is used when omitted.
        :return: The validated quiver over Q.
        :raises InvalidInputError: If the document is malformed.
        :raises BaseMismatchError: If the document's base differs from ``base``.
        :raises InvalidQuiverError: If the labels do not commute with the endpoints.
        """
        return self.parse_over_q(self._load(Path(file_path)), base)

    def parse_quiver(self, payload: Any) -> Quiver:
        if not isinstance(payload, dict):
            raise InvalidInputError("a quiver document must be a mapping")
        vertices = payload.get("vertices")
        arrows = payload.get("arrows", [])
        if not isinstance(vertices, list) or not isinstance(arrows, list):
            raise InvalidInputError("'vertices' and 'arrows' must be lists")

        parsed: List[Arrow] = []
        for position, arrow in enumerate(arrows):
            if not isinstance(arrow, dict) or not {"name", "from", "to"} <= arrow.keys():
                raise InvalidInputError(f"arrow #{position} needs 'name', 'from' and 'to'")
            parsed.append(Arrow(str(arrow["name"]), str(arrow["from"]), str(arrow["to"])))

        quiver = Quiver(tuple(str(v) for v in vertices), tuple(parsed))
        validate(quiver).raise_for_errors()
        return quiver

    def parse_over_q(self, payload: Any, base: Optional[Quiver] = None) -> QuiverOverQ:
        if not isinstance(payload, dict) or not {"base", "total"} <= payload.keys():
            raise InvalidInputError("a quiver over Q needs 'base' and 'total' quivers")
        document = cast(schema.QuiverOverQDict, payload)
        declared = self.parse_quiver(document["base"])
        if base is not None and declared != base:
            raise BaseMismatchError("the document's base differs from the given quiver")
        total = self.parse_quiver(document["total"])
        vertex_label = self._labels(payload, "vertexLabel")
        arrow_label = self._labels(payload, "arrowLabel")
        return QuiverOverQ(total, declared, vertex_label, arrow_label)

    def _labels(self, payload: Dict[str, Any], key: str) -> Dict[str, str]:
        labels = payload.get(key, {})
        if not isinstance(labels, dict):
            raise InvalidQuiverError(f"{key!r} must map names to base names")
        return {str(k): str(v) for k, v in labels.items()}

    def _load(self, file_path: Path) -> Any:
        try:
            text = file_path.read_text(encoding="utf-8")
        except OSError as exc:
            raise InvalidInputError(f"cannot read {file_path}: {exc.strerror}") from None
        try:
            if file_path.suffix.lower() in YAML_SUFFIXES:
                return yaml.safe_load(text)
            return json.loads(text)
        except (yaml.YAMLError, json.JSONDecodeError) as exc:
            raise InvalidInputError(f"cannot parse {file_path}: {exc}") from None


def dump_quiver(quiver: Quiver) -> schema.QuiverDict:
    return {
        "vertices": list(quiver.vertices),
        "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in quiver.arrows],
    }


def dump_over_q(x: QuiverOverQ) -> schema.QuiverOverQDict:
    """
    Write a quiver over Q in the document shape ``QuiverReader.read_over_q`` reads.
    """
    return {
        "base": dump_quiver(x.base),
        "total": dump_quiver(x.total),
        "vertexLabel": {v: x.vertex_label[v] for v in x.total.vertices},
        "arrowLabel": {a.name: x.arrow_label[a.name] for a in x.total.arrows},
    }
