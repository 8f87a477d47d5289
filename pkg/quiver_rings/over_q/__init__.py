from ._fiber_product import fiber_product, pair_name
from ._homs import count_homs, iso_over_q, iter_homs
from ._quiver_over_q import (
    OverQMorphism,
    QuiverOverQ,
    connected_components,
    disjoint_union,
    inclusion,
    is_morphism,
    is_wrapping,
    require_same_base,
    restrict,
    support,
)

__all__ = ("QuiverOverQ", "OverQMorphism", "inclusion", "restrict", "support", "is_wrapping",
           "connected_components", "disjoint_union", "is_morphism", "require_same_base",
           "count_homs", "iter_homs", "iso_over_q", "fiber_product", "pair_name",)
