"""Computational companion to Polignac numbers and arithmetic progressions."""
from .admissibility import (
    AdmissibilityCertificate,
    AdmissibilityViolation,
    AdmissibleTuple,
    NarrowTupleResult,
    is_admissible,
    lemma1_polignac_window,
    lemma1_tuple,
    narrow_tuple,
    parse_tuple,
)
from .census import (
    CandidateSet,
    CoverReport,
    GapCensus,
    candidate_set,
    density_lower_bound,
    empirical_density,
    gap_census,
    interval_cover_constant,
    read_census,
    write_census,
)
from .primes import CapacityError, PrimeSegment, primes_in_range, primorial
from .progressions import APRun, BlockSequence, DirichletSpec, ap_blocks, dirichlet_subsequence, longest_ap_in_set

__version__ = "0.1.0"
