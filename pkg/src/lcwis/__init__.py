"""Longest common weakly increasing subsequence: solvers, oracles and the
reduction chain MAX-CNF-SAT -> most-orthogonal vectors -> LCWIS."""

from .core import (
    Sequence,
    WeightedAlphabet,
    is_subsequence,
    is_weakly_increasing,
    make_sequence,
    total_weight,
)
from .gadgets import (
    CombinedInstance,
    GadgetSide,
    and_gadget,
    combine,
    coordinate_gadget,
    expand_weights,
    or_gadget,
    shift_alphabet,
    vector_gadget,
)
from .reductions import (
    BitVectorSet,
    CnfFormula,
    ReductionCertificate,
    decode,
    maxsat_oracle,
    maxsat_via_lcwis,
    ovp_oracle,
    ovp_to_lcwis_instance,
    vectors_from_cnf,
)
from .solvers import SolveResult, lcwis, lcwis_oracle, wlcwis, wlcwis_oracle

__version__ = "0.1.0"
