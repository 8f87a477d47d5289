"""
TypedDict shapes of the files this package reads and of the reports it writes.

Quiver files are JSON or YAML documents; reports are dumped as JSON or YAML with the
same keys in the same order as their text rendering.
"""
from typing import Dict, List, Optional, TypedDict

__all__ = ("ArrowDict", "QuiverDict", "QuiverOverQDict", "PathsReport", "TensorReport",
           "SupportDict", "PieObjectDict", "PieListReport", "MatrixReport", "RealizationReport",
           "LinearizationReport", "IdempotentDict", "IdempotentsReport", "ProductReport",
           "CaseFailure", "SuiteReport", "VerifyReport",)

# "from" is a keyword, so the functional form is required
ArrowDict = TypedDict("ArrowDict", {
    # Arrow identifier, unique within the quiver.
    "name": str,

    # Source vertex.
    "from": str,

    # Target vertex.
    "to": str,
})


class QuiverDict(TypedDict):
    # Vertex identifiers in their canonical order.
    vertices: List[str]

    # Arrows in their canonical order.
    arrows: List[ArrowDict]


class QuiverOverQDict(TypedDict):
    # The quiver Q the labels point into.
    base: QuiverDict

    # The quiver being colored.
    total: QuiverDict

    # Base vertex of every vertex of ``total``.
    vertexLabel: Dict[str, str]

    # Base arrow of every arrow of ``total``.
    arrowLabel: Dict[str, str]


class PathsReport(TypedDict):
    command: str
    source: str
    target: str
    count: int

    # Paths rendered as ``3·α·γ``; the trivial path is its vertex.
    paths: List[str]


class TensorReport(TypedDict):
    command: str

    # "P" for projectives, "I" for injectives.
    family: str
    x: str
    y: str

    # Multiplicity of each indecomposable, zero entries omitted, topological order.
    multiplicities: Dict[str, int]
    decomposition: str


class SupportDict(TypedDict):
    vertices: List[str]
    arrows: List[str]


class PieObjectDict(TypedDict):
    name: str
    kind: str

    # Every construction producing this object, in P, I, E order.
    kinds: List[str]
    support: SupportDict
    dimension_vector: Dict[str, int]


class PieListReport(TypedDict):
    command: str
    count: int
    objects: List[PieObjectDict]


class MatrixReport(TypedDict):
    command: str

    # Row and column labels.
    objects: List[str]
    rows: List[List[int]]


class RealizationReport(TypedDict):
    command: str
    object: str

    # The object as a quiver over Q, readable back by ``linearize``.
    base: QuiverDict
    total: QuiverDict
    vertexLabel: Dict[str, str]
    arrowLabel: Dict[str, str]


class LinearizationReport(TypedDict):
    command: str

    # Dimension at every base vertex, base order.
    dims: Dict[str, int]

    # Row-major structure matrix of every base arrow, base order.
    matrices: Dict[str, List[List[int]]]

    # Vertices of the total quiver spanning each space.
    basis: Dict[str, List[str]]


class IdempotentDict(TypedDict):
    object: str
    expansion: str
    terms: Dict[str, int]
    dimension_vector: Dict[str, int]


class IdempotentsReport(TypedDict):
    command: str
    idempotents: List[IdempotentDict]

    # The sum of all idempotents in the object basis.
    identity: str


class ProductReport(TypedDict):
    command: str
    x: str
    y: str
    component_count: int
    components: Dict[str, int]
    decomposition: str


class CaseFailure(TypedDict):
    # Name of the violated property.
    invariant: str

    # Counterexample dump.
    detail: str


class SuiteReport(TypedDict):
    name: str
    passed: bool
    cases: int
    failure: Optional[CaseFailure]
    notes: List[str]


class VerifyReport(TypedDict):
    command: str
    seed: int
    passed: bool
    suites: List[SuiteReport]
