"""Exact-arithmetic toolkit for EO-module splittings.

Computes decompositions in the representation ring of F_p[C_p] and its
P(1)*-comodule counterpart, splittings of EO ^ Z into wedges of Sigma^s X_l
from mod-p homology data, and homotopy fixed point / Atiyah-Hirzebruch
spectral sequence charts.
"""

from eosplit._core import (
    EoError,
    ahss_chart,
    aq_tensor_square_check,
    chart_render,
    decompose,
    hfpss_chart,
    orientability,
    power_sums,
    smash_splitting,
    split_spectrum,
    sym_power,
    sym_power_brute,
    sym_splitting,
    tensor_rep,
    tensor_rep_brute,
    xl_homology,
    y2p_summands,
    zeta_matrix,
)

__all__ = [
    "EoError",
    "ahss_chart",
    "aq_tensor_square_check",
    "chart_render",
    "decompose",
    "hfpss_chart",
    "orientability",
    "power_sums",
    "smash_splitting",
    "split_spectrum",
    "sym_power",
    "sym_power_brute",
    "sym_splitting",
    "tensor_rep",
    "tensor_rep_brute",
    "xl_homology",
    "y2p_summands",
    "zeta_matrix",
]

__version__ = "0.1.0"
