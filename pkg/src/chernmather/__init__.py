"""Exact invariants of stratified projective varieties via projective duality.

Class polynomials of strata go in; local Euler obstructions, Chern-Mather
classes and affine cone-point obstructions come out, all in exact integer
arithmetic.  Generators are included for quadric hypersurfaces of any rank
and for the rank strata of square matrices (through Schubert calculus on
the Grassmannian).
"""

from .classpoly import (
    ClassPoly,
    chern_B,
    csm_linear_space,
    div_1p2H,
    involute,
    one_plus_h_power,
    signed,
)
from .detvar import (
    chern_mather_det,
    csm_stratum,
    duality_check,
    eu_table_det,
    q_poly,
    stratum_dim,
)
from .grassmann import (
    BundleChern,
    ChowElement,
    IntPoly,
    box_complement,
    chern_dual,
    chern_power,
    chern_sum,
    chern_tensor,
    conjugate,
    integrate,
    lr_coefficient,
    lr_multiply,
    partitions_in_box,
    taut_quot,
    taut_sub,
    taut_sub_dual,
)
from .linsolve import (
    InconsistentSystem,
    LinearSystemError,
    NonIntegerSolution,
    NonUniqueSolution,
    exact_solve,
    solve_integer,
)
from .quadric import (
    QuadricSpec,
    bilinear_embed,
    chern_mather_quadric,
    complex_link_chi,
    cross_validate,
    csm_quadric,
    csm_singular_locus,
    dual_cm_classes,
    eu_values,
    milnor_class,
    milnor_number,
)
from .strata import (
    EulerTable,
    StratifiedPair,
    Stratum,
    chern_mather,
    eu_at_origin,
    euler_table,
    solve_system,
)

__version__ = "0.1.0"
