from ._errors import (
    BaseMismatchError,
    CapExceededError,
    CategoryNotAcyclicError,
    CyclicQuiverError,
    InternalInvariantError,
    InvalidInputError,
    InvalidQuiverError,
    InvariantCheckFailed,
    PieConstructionError,
    PieNotClosedError,
    QuiverRingsError,
)
from ._version import version
from .core import Arrow, Quiver, Subquiver, connected_subquivers, enumerate_paths
from .linearize import Representation, linearization, tensor
from .moebius import AcyclicCategoryData, MoebiusRingElement
from .over_q import QuiverOverQ, count_homs, fiber_product, iso_over_q
from .pie import PieCategory, PieObject, build_pie, idempotents, structure_constants
from .projectives import ProjectiveRingElement, cartan_matrix, tensor_projectives

__version__ = version
__all__ = ("Arrow", "Quiver", "Subquiver", "connected_subquivers", "enumerate_paths",
           "QuiverOverQ", "count_homs", "iso_over_q", "fiber_product", "Representation",
           "linearization", "tensor", "cartan_matrix", "tensor_projectives",
           "ProjectiveRingElement", "AcyclicCategoryData", "MoebiusRingElement",
           "PieCategory", "PieObject", "build_pie", "structure_constants", "idempotents",
           "QuiverRingsError", "InvalidInputError", "InvalidQuiverError", "CyclicQuiverError",
           "BaseMismatchError", "PieConstructionError", "CategoryNotAcyclicError",
           "CapExceededError", "InternalInvariantError", "PieNotClosedError",
           "InvariantCheckFailed",)
