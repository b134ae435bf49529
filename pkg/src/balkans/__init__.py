"""Closed forms, numeric evaluation and relation finding for the (j, kappa, c) continued fractions."""

from .cf_engine import CFSpec, balkan_cf_spec, cf_decimal_and_depth, eval_cf_convergent, eval_cf_decimal
from .exactnum import HPReal, constant_value
from .forms import AlphaBeta, Area, QExact, Seeds4, classify, magic_constants, q_exact
from .relation_finder import find_integer_relation, recover_qexact

__version__ = "0.1.0"
