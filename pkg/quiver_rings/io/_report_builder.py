from typing import Dict, List, Mapping, Sequence

from ..core import Path, Quiver, topological_order
from ..linearize import Representation, linearization
from ..moebius import ObjectBasis
from ..pie import (
    PieCategory,
    PieObject,
    format_element,
    idempotents,
    identity_decomposition,
    virtual_dimension_vector,
)
from ..projectives import format_terms
from . import schema
from ._quiver_reader import dump_over_q

__all__ = ("ReportBuilder",)


class ReportBuilder:
    """
    Assembles the payloads printed by the command-line tool.

    Every report is a plain dictionary whose key order is the order of its text
    rendering, so JSON and YAML dumps mirror the text output line by line.
    """

    def build_paths(self, source: str, target: str, paths: Sequence[Path]) -> schema.PathsReport:
        return {
            "command": "paths",
            "source": source,
            "target": target,
            "count": len(paths),
            "paths": [str(path) for path in paths],
        }

    def build_tensor(self, quiver: Quiver, family: str, x: str, y: str,
                     multiplicities: Mapping[str, int]) -> schema.TensorReport:
        """
        Build the report of a tensor product of two projectives or two injectives.

        :param quiver: The quiver the indecomposables live over.
        :param family: ``"P"`` or ``"I"``.
        :param x: First vertex.
        :param y: Second vertex.
        :param multiplicities: Multiplicity per vertex.
        :return: The report, terms in topological order of ``quiver``.
        """
        ordered = {w: multiplicities[w] for w in topological_order(quiver)
                   if multiplicities.get(w)}
        return {
            "command": "tensor-proj",
            "family": family,
            "x": x,
            "y": y,
            "multiplicities": ordered,
            "decomposition": format_terms(ordered, family),
        }

    def build_pie_object(self, obj: PieObject) -> schema.PieObjectDict:
        kinds = sorted(obj.kinds, key=lambda kind: kind.position)
        return {
            "name": obj.name,
            "kind": obj.kind.value,
            "kinds": [kind.value for kind in kinds],
            "support": {
                "vertices": list(obj.support.vertex_list),
                "arrows": [arrow.name for arrow in obj.support.arrow_list],
            },
            "dimension_vector": {v: n for v, n in linearization(obj.realization).dims.items()},
        }

    def build_pie_list(self, category: PieCategory) -> schema.PieListReport:
        return {
            "command": "pie list",
            "count": len(category),
            "objects": [self.build_pie_object(obj) for obj in category.objects],
        }

    def build_matrix(self, command: str, names: Sequence[str],
                     rows: Sequence[Sequence[int]]) -> schema.MatrixReport:
        return {
            "command": command,
            "objects": list(names),
            "rows": [list(row) for row in rows],
        }

    def build_idempotents(self, category: PieCategory) -> schema.IdempotentsReport:
        """
        Expand the orthogonal idempotent of every object in the object basis.

        :param category: A PIE category.
        :return: One entry per object in category order, and the identity.
        """
        entries: List[schema.IdempotentDict] = []
        for obj, element in idempotents(category).items():
            terms = element.in_basis(ObjectBasis.OBJECT).terms()
            entries.append({
                "object": obj.name,
                "expansion": format_element(element, lead=obj),
                "terms": {x.name: terms[x] for x in terms},
                "dimension_vector": virtual_dimension_vector(category, element).as_dict(),
            })
        return {
            "command": "pie idempotents",
            "idempotents": entries,
            "identity": format_element(identity_decomposition(category)),
        }

    def build_realization(self, obj: PieObject) -> schema.RealizationReport:
        document = dump_over_q(obj.realization)
        return {
            "command": "pie realize",
            "object": obj.name,
            "base": document["base"],
            "total": document["total"],
            "vertexLabel": document["vertexLabel"],
            "arrowLabel": document["arrowLabel"],
        }

    def build_linearization(self, rep: Representation) -> schema.LinearizationReport:
        payload = rep.to_dict()
        return {
            "command": "linearize",
            "dims": payload["dims"],
            "matrices": payload["matrices"],
            "basis": payload.get("basis", {v: [] for v in rep.base.vertices}),
        }

    def build_product(self, category: PieCategory, x: PieObject, y: PieObject,
                      components: Dict[PieObject, int]) -> schema.ProductReport:
        element = category.element(components)
        return {
            "command": "pie product",
            "x": x.name,
            "y": y.name,
            "component_count": sum(components.values()),
            "components": {obj.name: n for obj, n in components.items()},
            "decomposition": format_element(element),
        }

    def build_verify(self, seed: int,
                     suites: Sequence[schema.SuiteReport]) -> schema.VerifyReport:
        return {
            "command": "verify",
            "seed": seed,
            "passed": all(suite["passed"] for suite in suites),
            "suites": list(suites),
        }
