"""Exact algebra for two-dimensional algebraic subshifts over prime fields.

Laurent polynomials over F_p or Z, Newton polygons and line polynomial
factors, resultant elimination, configuration generators and pattern
complexity, tied together by a periodicity pipeline.
"""

__version__ = "0.1.0"

from .algebra import (
    GF,
    ZZ,
    LaurentPoly,
    Ring,
    format_poly,
    invert_unimodular,
    lift_to_integers,
    monomial_normal_form,
    parse_poly,
    poly_add,
    poly_mul,
    reduce_mod_p,
    substitute_x,
    unimodular_change,
)
from .complexity import (
    PatternSet,
    Shape,
    annihilator_from_kernel,
    complexity_count,
    enumerate_patterns,
    kernel_annihilators,
    nullspace_integer,
    nullspace_mod_p,
    scattered_square,
)
from .config import (
    AdditiveCASource,
    AnnihilatorCertificate,
    ConfigSource,
    FourDotSource,
    PeriodEvidence,
    Region,
    SublatticeLines,
    SumSource,
    TorusSource,
    Window,
    ZLiftSource,
    additive_ca_torus,
    apply_poly,
    check_annihilates,
    constant_source,
    detect_periods,
    format_grid,
    fourdot_decompose,
    generate_window,
    parse_grid,
    search_monomial_difference_annihilator,
    sublattice_counterexample,
    window_of,
    zlift,
)
from .elimination import (
    EliminationResult,
    bezout_cofactors,
    coprime_periodicity,
    exact_divide,
    poly_gcd,
    resultant,
)
from .errors import AlgSubshiftError
from .linefactors import (
    LineFactorProfile,
    NivatClass,
    NivatKind,
    classify_nivat,
    line_content,
    line_factor_profile,
    straightening_matrix,
)
from .newton import (
    Direction,
    NewtonPolygon,
    candidate_line_directions,
    newton_polygon,
    parallel_edge_directions,
    sublattice_index,
)
from .pipeline import PipelineReport, ledrappier_ideal_membership, nivat_pipeline, worked_example
