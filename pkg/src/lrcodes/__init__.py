"""Distance-optimal locally recoverable codes for any length n <= q.

Build a code with validate_params + build_code, move symbols with
encode / repair_local / decode_erasures, and check every claim with the
verify module's brute-force oracles.  The lrcodes command line exposes
the same operations on a JSON code-file format.
"""

from .bounds import (
    NOT_APPLICABLE,
    BoundsReport,
    improved_bound,
    optimality_report,
    predicted_distance,
    rate_bound_holds,
    singleton_like_bound,
)
from .construction import (
    CodeParams,
    CodeSpec,
    MessageLayout,
    assemble_polynomial,
    build_code,
    encode,
    extend_to_parent,
    message_layout,
    validate_params,
)
from .errors import (
    BudgetExceeded,
    DivisionByZero,
    DuplicateAbscissa,
    FieldTooSmall,
    IndexOutOfRange,
    InternalInconsistency,
    LengthMismatch,
    LrcError,
    NoSubgroup,
    NotAPrimePower,
    NotConstantOnBlocks,
    RateBoundViolated,
    SEqualsOne,
    TooManyBlocks,
    Unrecoverable,
    UnsupportedField,
)
from .field import Field, lagrange_interpolate
from .goodpoly import (
    GoodPolynomial,
    PartitionSpec,
    SubgroupSpec,
    coset_partition,
    find_subgroup,
    good_polynomial,
    normalize_gamma,
)
from .repair import (
    ERASED,
    ErasurePattern,
    apply_erasures,
    decode_erasures,
    erasure_pattern,
    locate_group,
    repair_coordinate,
    repair_local,
)
from .verify import (
    VerificationReport,
    brute_force_distance,
    exhaustive_erasure_test,
    matrix_rank,
    minimum_weight_word,
    run_verification,
    verify_locality,
    verify_shortening,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "BudgetExceeded",
    "CodeParams",
    "CodeSpec",
    "DivisionByZero",
    "DuplicateAbscissa",
    "ERASED",
    "ErasurePattern",
    "Field",
    "FieldTooSmall",
    "GoodPolynomial",
    "IndexOutOfRange",
    "InternalInconsistency",
    "LengthMismatch",
    "LrcError",
    "MessageLayout",
    "NOT_APPLICABLE",
    "NoSubgroup",
    "NotAPrimePower",
    "NotConstantOnBlocks",
    "PartitionSpec",
    "RateBoundViolated",
    "SEqualsOne",
    "SubgroupSpec",
    "TooManyBlocks",
    "Unrecoverable",
    "UnsupportedField",
    "VerificationReport",
    "apply_erasures",
    "assemble_polynomial",
    "brute_force_distance",
    "build_code",
    "coset_partition",
    "decode_erasures",
    "encode",
    "erasure_pattern",
    "exhaustive_erasure_test",
    "extend_to_parent",
    "find_subgroup",
    "good_polynomial",
    "improved_bound",
    "lagrange_interpolate",
    "locate_group",
    "matrix_rank",
    "message_layout",
    "minimum_weight_word",
    "normalize_gamma",
    "optimality_report",
    "predicted_distance",
    "rate_bound_holds",
    "repair_coordinate",
    "repair_local",
    "run_verification",
    "singleton_like_bound",
    "validate_params",
    "verify_locality",
    "verify_shortening",
]
