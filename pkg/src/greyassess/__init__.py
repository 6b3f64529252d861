"""Grey-number arithmetic and linguistic-grade assessment.

Grey numbers are closed real intervals standing for imprecisely known
quantities. This package provides their arithmetic, whitening to a
representative value, configurable linguistic grade scales, group
assessment from grade counts or raw score sheets, a triangular fuzzy
number cross-check, and a small expression calculator. See the
``greyassess`` console script for the command line surface.
"""

from .assess import (
    AssessmentReport,
    GradeDistribution,
    ScoreSheet,
    TIE_TOLERANCE,
    assess,
    compare_groups,
    mean_gn,
    raw_mean,
    scores_to_distribution,
)
from .csvio import DataFormatError, dump_counts_csv, load_counts_csv, load_scores_csv
from .expr import (
    BinaryOp,
    GnExpression,
    GnSyntaxError,
    Literal,
    calc,
    eval_expression,
    format_expression,
    parse_expression,
)
from .grey import GreyNumber, IntervalError, ZeroDivisorError, white
from .scale import (
    GradeScale,
    OutOfDomainError,
    ScaleFormatError,
    UnknownGradeError,
    default_scale,
    format_scale_text,
    parse_scale_text,
    read_scale_file,
    strict_scale,
    validate_scale,
    write_scale_file,
)
from .tfn import (
    EQUIVALENCE_TOLERANCE,
    EquivalenceCheck,
    TriangularFuzzyNumber,
    check_equivalence,
    defuzzify,
    grade_tfn,
    tfn_mean,
)

__version__ = "0.1.0"

__all__ = [
    "AssessmentReport",
    "BinaryOp",
    "DataFormatError",
    "EQUIVALENCE_TOLERANCE",
    "EquivalenceCheck",
    "GnExpression",
    "GnSyntaxError",
    "GradeDistribution",
    "GradeScale",
    "GreyNumber",
    "IntervalError",
    "Literal",
    "OutOfDomainError",
    "ScaleFormatError",
    "ScoreSheet",
    "TIE_TOLERANCE",
    "TriangularFuzzyNumber",
    "UnknownGradeError",
    "ZeroDivisorError",
    "assess",
    "calc",
    "check_equivalence",
    "compare_groups",
    "default_scale",
    "defuzzify",
    "dump_counts_csv",
    "eval_expression",
    "format_expression",
    "format_scale_text",
    "grade_tfn",
    "load_counts_csv",
    "load_scores_csv",
    "mean_gn",
    "parse_expression",
    "parse_scale_text",
    "raw_mean",
    "read_scale_file",
    "scores_to_distribution",
    "strict_scale",
    "tfn_mean",
    "validate_scale",
    "white",
    "write_scale_file",
]
