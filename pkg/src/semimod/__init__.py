"""semimod: exact membership decisions over polynomial rings.

The library decides membership in finitely generated submodules of R^n,
in their smallest semiprime enlargements, and in left ideals of M_n(R),
for R = k[x_1..x_d] with k the rationals or a small finite field.  All
arithmetic is exact; every positive verdict can carry a cofactor
certificate and every negative one may carry a re-verified witness point.
"""

from .closure import (
    BilinearEncoding,
    bilinear_encoding,
    closure_law_check,
    radical_intersection_check,
    radical_member,
    semiprime_member,
)
from .errors import (
    DimensionMismatchError,
    DivisionByZeroError,
    EnumerationCapExceededError,
    InfiniteFieldError,
    MismatchedFieldError,
    MismatchedRingError,
    ProblemSyntaxError,
    ResourceLimitExceededError,
    SemimodError,
    UndefinedNameError,
    ZeroCovectorError,
)
from .fields import (
    QQ,
    FieldElement,
    PrimeField,
    QuadraticField,
    RationalField,
    enumerate_field,
)
from .groebner import (
    GroebnerBasis,
    GroebnerLimits,
    NormalFormResult,
    SubmodulePresentation,
    buchberger,
    ideal_member,
    ideal_presentation,
    normal_form,
    s_vector,
    submodule_member,
)
from .matrixideals import (
    LeftIdealPresentation,
    ideal_with_rows_in,
    matrix_member,
    matrix_semiprime_member,
    max_left_ideal_member,
    row_module,
)
from .oracle import OracleReport, agreement_check, kernel_basis, oracle_check
from .parser import parse_polynomial, parse_problem, format_problem
from .poly import (
    OrderSpec,
    Polynomial,
    PolyMatrix,
    PolyRing,
    VectorPoly,
    compare_module_monomials,
    compare_monomials,
    identity_matrix,
    unit_vector,
)
from .submodules import (
    HyperplaneSubmodule,
    PrimeClosure,
    hyperplane_generators,
    hyperplane_member,
    prime_closure_at,
    semiprime_refutation,
    weakly_semiprime_refutation,
)
from .verdicts import EXTENSION_STABLE, SOUND_ONLY, Verdict, Witness

__version__ = "0.1.0"
