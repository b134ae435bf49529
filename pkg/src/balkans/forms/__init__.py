"""Closed forms for the (j, kappa, c) fractions, region by region."""

from .croatia import (
    PsiPoly,
    croatia_alphabeta,
    croatia_alphabeta_from,
    croatia_mu,
    croatia_psi_interpolate,
    finite_alphabeta,
    finite_value,
    nested_value,
)
from .dispatch import magic_constants, q_exact
from .inostranstvo import inostranstvo_delta, inostranstvo_q1, inostranstvo_q2_ratio, inostranstvo_spec
from .kosovo import (
    SEEDS_3,
    SEEDS_5,
    kappa_scale,
    kappa_sequence,
    kosovo_alphabeta,
    kosovo_j_seeds,
    kosovo_kappa_level,
)
from .master import (
    alphabeta_from_values,
    bosnia_q_via_delta,
    bosnia_value,
    c_level_delta,
    c_level_f,
    c_level_g,
    c_level_h,
    delta_basis,
    master_c_level,
)
from .montenegro import compact_delta, compact_delta_alt, montenegro_constants, montenegro_delta, montenegro_q
from .qexact import QExact
from .regions import Area, classify, serbia_reflect
from .symmetry import ratio_a0_a2, tau_ratio, zeta
from .types import AlphaBeta, Seeds4, clear_caches
