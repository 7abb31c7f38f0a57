"""Cut-and-choose districting game with threshold elections.

One party partitions the voters into equal districts, the other then picks
the supermajority threshold a district takes to win outright; districts
where neither side clears it are awarded randomly. This package models the
game exactly (rational arithmetic throughout), computes both players'
optimal strategies, solves small instances exhaustively, and analyzes real
district-level election returns for exploitability.
"""

from .errors import (
    BreakpointAmbiguity,
    DistrictGameError,
    EmptyFile,
    EmptyStrategySpace,
    InfeasibleConstruction,
    InvalidArgs,
    OutOfRange,
    ParseError,
    TheoremViolation,
    TooLarge,
    UnsupportedFormat,
)
from .model import (
    Districting,
    DistrictingFunction,
    JumpDiscontinuity,
    Ratio,
    ShareProfile,
    VoterMap,
    as_ratio,
    districting_function,
    eval_g,
    integral_g,
    round_down_to,
    round_up_to,
)
from .election import (
    AllocationMode,
    DistrictStatus,
    ElectionOutcome,
    Threshold,
    canonicalize_threshold,
    chooser_value_integral,
    classify,
    expected_seats,
    run_election,
    threshold_cells,
    u_b_from_g,
)
from .strategies import (
    BestResponse,
    StackingCap,
    best_response,
    check_symmetry,
    cut_optimal,
    exploitability,
    is_equalizing,
)
from .solver import (
    InstanceRecord,
    MinimaxResult,
    TheoremReport,
    count_districtings,
    enumerate_districtings,
    minimax,
    verify_theorems,
)
from .analysis import (
    AnalysisReport,
    ElectionRecord,
    analyze,
    analyze_csv,
    emit_diagram,
    load_csv,
    sample_data_path,
    statewide_share,
    to_share_profile,
)

__version__ = "0.1.0"

__all__ = [
    "AllocationMode",
    "AnalysisReport",
    "BestResponse",
    "BreakpointAmbiguity",
    "DistrictGameError",
    "DistrictStatus",
    "Districting",
    "DistrictingFunction",
    "ElectionOutcome",
    "ElectionRecord",
    "EmptyFile",
    "EmptyStrategySpace",
    "InfeasibleConstruction",
    "InstanceRecord",
    "InvalidArgs",
    "JumpDiscontinuity",
    "MinimaxResult",
    "OutOfRange",
    "ParseError",
    "Ratio",
    "ShareProfile",
    "StackingCap",
    "TheoremReport",
    "TheoremViolation",
    "Threshold",
    "TooLarge",
    "UnsupportedFormat",
    "VoterMap",
    "analyze",
    "analyze_csv",
    "as_ratio",
    "best_response",
    "canonicalize_threshold",
    "check_symmetry",
    "chooser_value_integral",
    "classify",
    "count_districtings",
    "cut_optimal",
    "districting_function",
    "emit_diagram",
    "enumerate_districtings",
    "eval_g",
    "expected_seats",
    "exploitability",
    "integral_g",
    "is_equalizing",
    "load_csv",
    "minimax",
    "round_down_to",
    "round_up_to",
    "run_election",
    "sample_data_path",
    "statewide_share",
    "threshold_cells",
    "to_share_profile",
    "u_b_from_g",
    "verify_theorems",
]
