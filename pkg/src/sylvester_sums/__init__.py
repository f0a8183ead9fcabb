"""Sylvester's double sums, subresultants and exact checks of their closed forms."""

from .double_sum import RootList, SylvParams, r_product, subsets, sylvester_double_sum
from .errors import (
    BoundTooSmall,
    DuplicateRoots,
    IndexOutOfRange,
    NegativeN,
    NonzeroRemainder,
    NotMonic,
    SylvesterError,
    Unordered,
)
from .exact_poly import (
    Poly,
    Rational,
    format_rational,
    parse_rational,
    poly_arith,
    poly_coeff,
    poly_div_linear,
    poly_eval,
    poly_from_roots,
)
from .subres import (
    CofactorKind,
    SubresMatrix,
    cofactor_poly,
    fraction_free_det,
    principal_coeff,
    resultant,
    subresultant,
)
from .verify import (
    CaseTag,
    CheckReport,
    binomial,
    classify_case,
    expected_sylv,
    random_rootlists,
    verify_cofactor_specializations,
    verify_corollaries,
    verify_lemma_specializations,
    verify_theorem_sweep,
)

__version__ = "0.1.0"
