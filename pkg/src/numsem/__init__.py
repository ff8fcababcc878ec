"""Exact-arithmetic toolkit for numerical semigroups.

Core objects and the operations on them:

  * generator sets with Apery-set machinery: Frobenius number, genus,
    membership, symmetry, minimality (``numsem.core``);
  * Hilbert-series numerators and the symmetric / complete-intersection
    classification of 4-generated semigroups (``numsem.hilbert``);
  * symmetric-polynomial identities and the closed-form Frobenius lower
    bounds (``numsem.bounds``);
  * an exhaustive survey engine with law checking (``numsem.survey``).

Hot kernels run through a compiled Cython extension when built; a
pure-Python fallback is selected automatically (see
``numsem.kernel_backend``).
"""

from ._kernels import backend_name as kernel_backend
from .bounds import (
    BoundReport,
    SymmetricFunctions,
    bound_ci,
    bound_ns3,
    bound_ns4,
    bound_report,
    bound_symmetric_not_ci,
    elementary_symmetric,
    exact_threshold_check,
    maclaurin_chain,
    newton_consistency,
    power_sums,
    refined_cbrt,
    symmetric_functions,
    verify_intermediate_inequalities,
    verify_key_identity,
)
from .core import (
    AperyTable,
    GeneratorSet,
    apery_set,
    frobenius,
    generator_set,
    genus,
    is_member,
    is_minimal_generating_set,
    is_symmetric,
    redundant_generator,
)
from .errors import (
    ClassificationContradiction,
    ConfigInvalid,
    DefectError,
    DuplicateGenerator,
    EmptyInput,
    GcdNotOne,
    GeneratorBelowTwo,
    NotFourGenerators,
    NotMinimal,
    NotThreeGenerators,
    SurveyDefect,
    TruncationInconsistency,
    ValidationError,
)
from .hilbert import (
    ClassKind,
    NumeratorPoly,
    SemigroupClass,
    binomial_product,
    bresinsky_numerator,
    classify,
    numerator,
    parse_bresinsky,
    peel_ci_product,
)
from .survey import (
    CSV_HEADER,
    SummaryStats,
    SurveyConfig,
    SurveyRecord,
    record_to_json_dict,
    records_to_csv,
    run_survey,
    summarize,
)

__version__ = "0.1.0"
