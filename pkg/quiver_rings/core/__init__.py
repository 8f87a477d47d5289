from ._paths import (
    Path,
    PathCountMatrix,
    enumerate_paths,
    iter_paths_from,
    iter_paths_to,
    path_count_matrix,
)
from ._quiver import (
    Arrow,
    Quiver,
    ValidationReport,
    ensure_acyclic,
    opposite,
    topological_order,
    validate,
)
from ._subquivers import (
    DEFAULT_SUBQUIVER_CAP,
    Subquiver,
    connected_subquivers,
    full_subquiver,
    successor_closure,
)

__all__ = ("Arrow", "Quiver", "ValidationReport", "validate", "ensure_acyclic", "opposite",
           "topological_order", "Path", "PathCountMatrix", "enumerate_paths", "iter_paths_from",
           "iter_paths_to", "path_count_matrix", "Subquiver", "DEFAULT_SUBQUIVER_CAP",
           "full_subquiver", "connected_subquivers", "successor_closure",)
