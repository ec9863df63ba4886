"""relhom: exact-arithmetic relative (co)homology of maps.

Mapping cones of chain maps, simplicial and Cech models, gerbe cocycle
classes, integrality / pre-quantization tests, and root-system alcove
computations, all over Z and Q with no floating point.
"""

from relhom.exact import (
    AbelianGroupPresentation,
    IntegerMatrix,
    SmithDecomposition,
    cokernel_presentation,
    integer_solve,
    kernel_basis,
    smith_normal_form,
)

__all__ = [
    "AbelianGroupPresentation",
    "IntegerMatrix",
    "SmithDecomposition",
    "cokernel_presentation",
    "integer_solve",
    "kernel_basis",
    "smith_normal_form",
]

__version__ = "0.1.0"
