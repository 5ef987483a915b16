"""Colex graphs and the extremal values of the first degree-based graph entropy."""
from .colex import (
    ColexDecomposition,
    build_colex,
    build_colex_k,
    closed_form_degseq,
    colex_degseq,
    decompose,
    decompose_global,
    lift_decomposition,
)
from .graph import (
    DegreeSequence,
    Graph,
    compare_h,
    degree_sequence,
    entropy,
    f_xlogx,
    h_exact_key,
    h_generic,
    h_value,
)
from .majorization import balanced_gain_argmax, check_karamata, majorizes
from .oracle import ExtremalReport, VerificationOutcome, enumerate_graphical, find_max_h, is_graphical
from .threshold import CreationSequence, clique_number, enumerate_creation, enumerate_threshold_by_size, is_threshold, realize

__version__ = "0.1.0"
