"""Subword occurrences and subword entropy of binary words."""
__version__ = "0.1.0"

from .entropy import MaxoccResult, maxocc, maxocc_exceeds, maxocc_lower_bound, maxocc_upper_bound, subword_entropy
from .genfunc import OccMatrix, RationalGF, gf_construct, gf_series, occ_table_periodic, periodic_entropy_estimate, verify_closed_forms
from .occurrence import OccCache, occ_dp, occ_runs
from .poly import BivariatePoly
from .search import (
    Checkpoint,
    SearchInterrupted,
    SearchResult,
    insertion_extend,
    limit_lower_bound,
    local_search_adaptive,
    min_entropy_exhaustive,
    verify_superadditivity,
)
from .words import RunTuple, Word, WordParseError, from_runs, symmetry_class_representative, to_runs

__all__ = [
    "BivariatePoly",
    "Checkpoint",
    "MaxoccResult",
    "OccCache",
    "OccMatrix",
    "RationalGF",
    "RunTuple",
    "SearchInterrupted",
    "SearchResult",
    "Word",
    "WordParseError",
    "from_runs",
    "gf_construct",
    "gf_series",
    "insertion_extend",
    "limit_lower_bound",
    "local_search_adaptive",
    "maxocc",
    "maxocc_exceeds",
    "maxocc_lower_bound",
    "maxocc_upper_bound",
    "min_entropy_exhaustive",
    "occ_dp",
    "occ_runs",
    "occ_table_periodic",
    "periodic_entropy_estimate",
    "subword_entropy",
    "symmetry_class_representative",
    "to_runs",
    "verify_closed_forms",
]
