"""Exact pfaffian formats, parallel unprojection, and Fano verification.

The package goes from 5x5 skew-symmetric matrices in Tom/Jerry triple
format to 20-generator codimension-6 Gorenstein ideals, and verifies
two codimension-6 Fano 3-fold constructions (Graded Ring Database IDs
14885 and 12979) with exact arithmetic throughout.

Module map: ring (polynomial substrate), groebner (bases, dimension,
Hilbert numerators), formats (pfaffians, Tom/Jerry membership, triple
classification), unprojection (the fundamental calculation and the
triple unprojection ideal), fano (the two family constructions and
their certificates), cli (command line front end).
"""

from .ring import (
    AlgebraError,
    AnyDegree,
    CoefficientError,
    FieldSpec,
    GradingError,
    InexactDivisionError,
    NotHomogeneous,
    ParseError,
    Polynomial,
    QQ,
    RingSpec,
    Substitution,
    exact_divide,
    is_homogeneous,
    linear_coefficient_matrix,
    parse_poly,
    parse_ring_header,
    partial_derivative,
    ring_header,
    substitute,
    weighted_degree,
)
from .groebner import (
    Budget,
    DEFAULT_BUDGET,
    DivisionRecord,
    GroebnerBasis,
    HilbertNumerator,
    IdealPresentation,
    NotInIdealError,
    ResourceBudgetExceededError,
    buchberger,
    hilbert_numerator,
    is_member,
    krull_dimension,
    lift_cofactors,
    normal_form,
    read_ideal_file,
    reduce_poly,
    write_ideal_file,
)
from .formats import (
    FormatError,
    FormatKind,
    FormatReport,
    OrbitClass,
    SkewMatrix,
    TripleFormatSpec,
    VariableCI,
    build_tom123,
    enumerate_triple_classes,
    format_check,
    lies_in_variable_ideal,
    parse_format,
    read_matrix_file,
    tom123_ring,
    triple_constraints,
    triple_format_check,
    write_matrix_file,
)
from .unprojection import (
    Coupling,
    GenericTomData,
    TripleUnprojectionData,
    UnprojectionError,
    UnprojectionIdeal,
    build_unprojection_ideal,
    generic_fundamental_data,
    generic_ring,
    homogeneity_report,
    inclusion_check,
    is_homogeneous_ideal,
    pairwise_sum_collapse,
    phi_images,
    specialized_pfaffian_ideal,
    triple_unprojection,
    welldefinedness_check,
)
from .fano import (
    ConstructionError,
    ConstructionParams,
    FanoIdeal,
    FanoReport,
    HILBERT_TARGETS,
    HilbertReport,
    KNOWN_IDS,
    ORBIFOLD_TARGETS,
    OrbifoldStratum,
    QuasismoothCertificate,
    construct_family,
    euler_identity_check,
    fano_report,
    hilbert_report,
    jacobian,
    orbifold_report,
    pfaffian_stage_report,
    quasismooth_certificate,
    rng_stream,
    vanishing_rows_check,
)

__version__ = "1.0.0"
