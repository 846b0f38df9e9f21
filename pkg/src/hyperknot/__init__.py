"""Quandle colorings and cocycle state sums of braid closures over finite Alexander quandles."""

from .braid import (
    BraidWord,
    BurauMatrix,
    braid_burau,
    braid_components,
    braid_matrix_order,
    braid_parse,
    braid_permutation,
    braid_torus_crossing_number,
    braid_torus_word,
)
from .cocycle import (
    AbelianGroup,
    Cocycle,
    cocycle_check,
    cocycle_coboundary,
    cocycle_load,
    cocycle_search,
    cocycle_span,
    cocycle_zero,
    is_coboundary,
)
from .coloring import Coloring, coloring_enumerate, coloring_enumerate_burau, coloring_propagate
from .quandle import Quandle, quandle_alexander, quandle_check_axioms, quandle_load
from .ring import RingElement, RingSpec, ring_add, ring_inv_T, ring_make, ring_mul, ring_neg
from .sequence import SequenceReport, sequence_analyze, sequence_convergence_check
from .statesum import StateSum, statesum_cjkls, statesum_fepc, statesum_free_energy, statesum_norm

__version__ = "0.1.0"
