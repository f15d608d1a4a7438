"""Exact quantum cluster algebra computations over Z[v, v^-1]."""

from .cartan_weyl import (
    CartanDatum,
    WeylWord,
    datum_from_json,
    longest_word_length,
    positive_roots,
    preset,
    preset_labels,
    reduced_words_of_longest_element,
)
from .cluster_core import (
    CompatiblePair,
    QuantumSeed,
    codegree,
    degree,
    dominance_leq,
    frame_monomial,
    initial_seed,
    mutate_pair,
    mutate_seed,
    mutate_seq,
    seed_from_json,
    seed_to_json,
    vars_q_commute,
)
from .errors import (
    FormNotComputableError,
    FormulaNotApplicableError,
    IncompatiblePairError,
    NonIntegralError,
    NotDivisibleError,
    NotPointedError,
    NotReducedError,
    QClusterError,
)
from .gls import GLSSeed, Lambda_vars, build_gls, gls_report, lambda_matrix, lambda_tilde
from .ibox import IBox, boxes_commute, lambda_boxes, minor_box, pbw_of_box, support
from .pbw_g import (
    GL_pairing,
    GR_pairing,
    L_pairing,
    g_to_pbw,
    is_dual_pair,
    pbw_of_cluster_monomial,
    pbw_to_g,
    transfer_identity_holds,
    transfer_matrix,
)
from .qtorus import (
    QLaurent,
    TorusElement,
    exact_div_right,
    q_commutator_exponent,
    skew_value,
    torus_from_json,
    torus_to_json,
    x_pow,
)

__version__ = "0.1.0"

__all__ = [
    "CartanDatum",
    "CompatiblePair",
    "FormNotComputableError",
    "FormulaNotApplicableError",
    "GLSSeed",
    "GL_pairing",
    "GR_pairing",
    "IBox",
    "IncompatiblePairError",
    "L_pairing",
    "Lambda_vars",
    "NonIntegralError",
    "NotDivisibleError",
    "NotPointedError",
    "NotReducedError",
    "QClusterError",
    "QLaurent",
    "QuantumSeed",
    "TorusElement",
    "WeylWord",
    "boxes_commute",
    "build_gls",
    "codegree",
    "datum_from_json",
    "degree",
    "dominance_leq",
    "exact_div_right",
    "frame_monomial",
    "g_to_pbw",
    "gls_report",
    "initial_seed",
    "is_dual_pair",
    "lambda_boxes",
    "lambda_matrix",
    "lambda_tilde",
    "longest_word_length",
    "minor_box",
    "mutate_pair",
    "mutate_seed",
    "mutate_seq",
    "pbw_of_box",
    "pbw_of_cluster_monomial",
    "pbw_to_g",
    "positive_roots",
    "preset",
    "preset_labels",
    "q_commutator_exponent",
    "reduced_words_of_longest_element",
    "seed_from_json",
    "seed_to_json",
    "skew_value",
    "support",
    "torus_from_json",
    "torus_to_json",
    "transfer_identity_holds",
    "transfer_matrix",
    "vars_q_commute",
    "x_pow",
    "__version__",
]
