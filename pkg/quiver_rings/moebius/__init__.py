from ._category import (
    AcyclicCategoryData,
    build_category,
    moebius_recursive,
    moebius_value,
    poset_category,
)
from ._ring import (
    MoebiusRingElement,
    ObjectBasis,
    from_delta,
    identity_element,
    multiply,
    multiply_by_formula,
    to_delta,
)

__all__ = ("AcyclicCategoryData", "build_category", "poset_category", "moebius_value",
           "moebius_recursive", "MoebiusRingElement", "ObjectBasis", "to_delta", "from_delta",
           "multiply", "multiply_by_formula", "identity_element",)
