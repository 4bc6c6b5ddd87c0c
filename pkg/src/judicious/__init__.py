"""Judicious r-partitions of uniform multi-hypergraphs with exact certificates."""

from .certificate import Certificate, Verification, coverage_constant, threshold, verify_certificate
from .errors import (
    BudgetExceeded,
    InputError,
    InternalLogicError,
    ParseError,
    PreconditionError,
)
from .hypergraph import (
    MultiHypergraph,
    Partition,
    class_coverage,
    degree_joint,
    degree_meeting,
    degree_multi,
    max_degree,
    parts_met,
    shrink_uniformity,
    trim_to_set,
)
from .io import GenSpec, SplitMix64, generate, parse_instance, serialize_instance
from .local_search import (
    CoverageProfile,
    check_lemma_aaa,
    coverage_profile,
    improve_to_local_optimum,
    move_gain,
)
from .oracle import RulastInstance, brute_force_best, check_rulast, conjecture_gap_report
from .refinement import (
    GoodPartition,
    ShrunkWitness,
    TripleSplit,
    apply_lemma_aab,
    combine_big_small,
    combine_two_bigs,
    shrink_to_minimal_good,
    split_into_three_overlapping,
)
from .solver import CaseProfile, case_profile, partition_judicious

__version__ = "0.1.0"
