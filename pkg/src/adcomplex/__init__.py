"""Exact computations with augmented directed complexes.

Complexes with a finite basis, their tensor product and join, pushouts of
rigid monomorphisms, the cell tables of the associated ω-category, cylinders
and their vertical calculus, and a small library of standard shapes.
"""

from .cells import (
    CellTable,
    CompositionError,
    compose,
    compose_after,
    compose_k,
    enumerate_cells,
    evaluate_chain,
    identity_on,
    invert_cell,
    is_valid_cell,
    make_cell,
    map_cell,
    source_k,
    target_k,
    whisker_compose,
)
from .chains import Chain, DegreeError
from .colimits import PushoutError, PushoutProduct, pushout, pushout_product
from .complex import (
    BASIS,
    RELAXED,
    Complex,
    ComplexError,
    atom,
    is_strongly_loop_free,
    is_unital,
    relax_positivity,
    subcomplex,
    validate,
)
from .cylinders import (
    Cylinder,
    CylinderError,
    cell_morphism,
    invert_cylinder,
    is_invertible_cylinder,
    is_valid_cylinder,
    product_cylinder,
    vertical_compose,
    vertical_identity,
)
from .morphisms import (
    Morphism,
    MorphismError,
    identity,
    is_isomorphism,
    is_rigid_mono,
    validate_morphism,
)
from .morphisms import compose as compose_morphisms
from .products import (
    JOIN,
    TENSOR,
    anti_monoidal_swap,
    check_strength_triangles,
    dual_co,
    dual_op,
    join,
    join_mor,
    join_unit,
    strength_sigma,
    tensor,
    tensor_mor,
    tensor_unit,
)
from .report import Report, Violation
from .shapes import (
    boundary,
    collapse_map,
    cube,
    cube_to_disk,
    disk,
    oriental,
    path,
    reversible_presentation,
    sphere_inclusion,
)
