"""Attack-matrix decision procedures for Dung argumentation frameworks."""

from .argsets import ArgSet, ExtensionSet, SemanticsId
from .errors import (
    ArgumentationError,
    DimensionMismatch,
    DuplicateArgument,
    EmptyFramework,
    EmptySelection,
    EnumerationLimitExceeded,
    InternalInvariantViolated,
    OracleLimitExceeded,
    ParseError,
    PreconditionViolated,
    UnknownArgument,
)
from .framework import (
    ArgumentationFramework,
    framework_from_pairs,
    load,
    parse_apx,
    parse_tgf,
    serialize_apx,
    serialize_tgf,
)
from .matrix import (
    AttackMatrix,
    Block,
    a_block,
    block_is_zero,
    build_matrix,
    c_block,
    cf_block,
    col_is_nonzero,
    complementary_block,
    render,
    row_is_nonzero,
    s_block,
)
from .semantics import (
    CorrespondenceReading,
    enumerate_all,
    enumerate_conflict_free,
    enumerate_extensions,
    is_admissible,
    is_complete,
    is_conflict_free,
    is_stable,
    range_of,
    theorem20_literal,
)

__version__ = "0.1.0"
