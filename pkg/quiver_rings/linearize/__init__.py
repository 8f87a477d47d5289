from ._linearization import linearization, tensor
from ._representation import (
    DimensionVector,
    Representation,
    arrow_rank,
    dimension_vector,
    identity_representation,
    representations_equal,
    simple_representation,
)

__all__ = ("Representation", "DimensionVector", "linearization", "tensor",
           "representations_equal", "dimension_vector", "identity_representation",
           "simple_representation", "arrow_rank",)
