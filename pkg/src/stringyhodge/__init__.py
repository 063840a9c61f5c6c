"""Exact computation of stringy E-functions and stringy Hodge numbers from
combinatorial log-resolution data, with SNC weight-complex and local-defect
tooling and nonnegativity reports.
"""

from .polyalg import (
    BivariatePoly,
    DenominatorSpec,
    StringyFunction,
    diagonal_decompose,
    diagonal_reassemble,
    exact_divide_test,
    poly_invert_vars,
    poly_mul,
    ratfun_add,
    series_expand_factor,
)
from .hodge import (
    DiamondError,
    HodgeDiamond,
    builtin_diamond,
    curve,
    e_polynomial,
    kunneth,
    point,
    projective_space,
    quadric_surface,
    validate,
)
from .stringy import (
    DescriptorError,
    ResolutionDescriptor,
    StringyReport,
    a_pq,
    check_pd_identity,
    check_polynomial_consequences,
    check_symmetry,
    closed_form_h,
    crepant_compare,
    h22st_fourfold,
    stringy_e,
    stringy_hodge_table,
)
from .sncweights import (
    SncComplexData,
    SncComponent,
    SncDataError,
    coboundary_h0,
    exact_rank,
    purity_consequence_check,
    weight_graded_dims,
)
from .analysis import (
    ConjectureReport,
    ExceptionalFiberDescriptor,
    FiberComponent,
    conjecture_report,
    defect_bound_check,
    local_defect,
    product_stringy,
    threefold_h22_minus_h11,
)
from .descriptors import (
    DescriptorBundle,
    DescriptorFileError,
    load_bundle,
    load_descriptor,
    save_bundle,
)

__version__ = "0.1.0"
