from ._cartan import CartanMatrix, cartan_matrix, solve_cartan
from ._clebsch_gordan import projective_product, tensor_injectives, tensor_projectives
from ._ring import (
    Basis,
    ProjectiveRingElement,
    format_terms,
    from_e_basis,
    multiply_projective_elements,
    to_e_basis,
)

__all__ = ("CartanMatrix", "cartan_matrix", "solve_cartan", "Basis", "ProjectiveRingElement",
           "to_e_basis", "from_e_basis", "multiply_projective_elements", "format_terms",
           "tensor_projectives", "tensor_injectives", "projective_product",)
