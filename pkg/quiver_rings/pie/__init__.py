from ._category import (
    PieCategory,
    build_pie,
    format_element,
    identity_decomposition,
    idempotents,
    multiply_by_structure,
    structure_constants,
    virtual_dimension_vector,
)
from ._closed_forms import hom_count_closed_form, mu_closed_form, same_skeleton
from ._objects import (
    Coincidences,
    PieKind,
    PieObject,
    build_E,
    build_I,
    build_object,
    build_P,
    canonical_kind,
    object_name,
    qualified_label,
    support_label,
)

__all__ = ("PieKind", "Coincidences", "PieObject", "build_P", "build_I", "build_E",
           "build_object", "canonical_kind", "object_name", "support_label", "qualified_label",
           "PieCategory",
           "build_pie", "structure_constants", "multiply_by_structure", "idempotents",
           "identity_decomposition", "virtual_dimension_vector", "format_element",
           "hom_count_closed_form", "mu_closed_form", "same_skeleton",)
