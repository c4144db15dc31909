"""flagindex: mod-p cohomology of flag manifolds, characteristic classes of
wreath powers, and Fadell-Husseini indexes of cyclic group actions.

The package is organized bottom-up:

* galgebra  -- graded-commutative F_p algebras, presentations, degreewise
               linear algebra (bases, quotient dimensions, ideal membership);
* charclass -- classifying-space presentations (unitary, special orthogonal,
               cyclic), total/Euler classes, Grassmannians;
* wreath    -- the diagonal + induced normal form for the C_p-equivariant
               cohomology of p-fold powers, and characteristic classes of
               wreath powers of bundles;
* flagcoh   -- presentations of equidimensional flag manifolds and the
               Poincare series cross-checks (fibration and q-multinomial
               oracles);
* fhindex   -- Fadell-Husseini indexes: kernel generators, the degreewise
               index search, closed forms, relation verification, sphere
               indexes and shadow bounds;
* selftest  -- the frozen acceptance grid used by `flagindex selftest`;
* cli       -- the command line interface.
"""

from .charclass import (
    FIELD_COMPLEX,
    FIELD_REAL,
    GroupFamily,
    classifying_presentation,
    cyclic,
    euler_class,
    grassmann_presentation,
    inverse_total_class,
    oriented_grassmann_presentation,
    special_orthogonal,
    total_class,
    unitary,
)
from .fhindex import (
    UANDV,
    VONLY,
    BoundExceededError,
    IndexResult,
    IndexScan,
    ReductionReport,
    ShadowBound,
    closed_form_index,
    compute_index,
    decompose,
    index_report,
    kernel_generators,
    shadow_bound,
    sphere_index,
    verify_reduction_relations,
)
from .flagcoh import (
    SeriesDivisionError,
    SeriesReport,
    default_depth,
    fibration_series_oracle,
    flag_presentation,
    gaussian_multinomial,
    poincare_series,
)
from .galgebra import (
    EVEN,
    ODD,
    AlgebraPresentation,
    FpElement,
    GeneratorSpec,
    Monomial,
    Polynomial,
    StructuralError,
    degree_basis,
    ideal_member,
    mono_degree,
    mono_mul,
    parse_polynomial,
    parse_presentation,
    poly_mul,
    quotient_dimension,
    render_polynomial,
    render_presentation,
)
from .selftest import CheckResult, run_all
from .wreath import (
    OrbitKey,
    WreathClass,
    binomial_v_series,
    p_power,
    render_wreath_class,
    restrict_to_point,
    transfer_i,
    wreath_base,
    wreath_chern,
    wreath_degree_basis,
    wreath_euler,
    wreath_mul,
    wreath_pontrjagin,
    wreath_total_chern_of,
    z_class,
)

__version__ = "0.1.0"

__all__ = [
    "EVEN",
    "ODD",
    "AlgebraPresentation",
    "BoundExceededError",
    "CheckResult",
    "FIELD_COMPLEX",
    "FIELD_REAL",
    "FpElement",
    "GeneratorSpec",
    "GroupFamily",
    "IndexResult",
    "IndexScan",
    "Monomial",
    "OrbitKey",
    "Polynomial",
    "ReductionReport",
    "SeriesDivisionError",
    "SeriesReport",
    "ShadowBound",
    "StructuralError",
    "UANDV",
    "VONLY",
    "WreathClass",
    "binomial_v_series",
    "classifying_presentation",
    "closed_form_index",
    "compute_index",
    "cyclic",
    "decompose",
    "default_depth",
    "degree_basis",
    "euler_class",
    "fibration_series_oracle",
    "flag_presentation",
    "gaussian_multinomial",
    "grassmann_presentation",
    "ideal_member",
    "index_report",
    "inverse_total_class",
    "kernel_generators",
    "mono_degree",
    "mono_mul",
    "oriented_grassmann_presentation",
    "p_power",
    "parse_polynomial",
    "parse_presentation",
    "poincare_series",
    "poly_mul",
    "quotient_dimension",
    "render_polynomial",
    "render_presentation",
    "render_wreath_class",
    "restrict_to_point",
    "run_all",
    "shadow_bound",
    "special_orthogonal",
    "sphere_index",
    "total_class",
    "transfer_i",
    "unitary",
    "verify_reduction_relations",
    "wreath_base",
    "wreath_chern",
    "wreath_degree_basis",
    "wreath_euler",
    "wreath_mul",
    "wreath_pontrjagin",
    "wreath_total_chern_of",
    "z_class",
]
