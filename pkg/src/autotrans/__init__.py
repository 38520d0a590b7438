"""Exact series, decomposition tables and periodicity checks over finite fields."""

from .coeffs import DMonomial, d_cell, d_value, lucas_binom, u_at
from .decomp import Decomposition, b_table, decompose, interval_index
from .fq import FieldContext, FqElem, field_new, pow_int
from .lseries import Params, Series, binom_power, make_params, series_alpha, series_L_direct, series_Pi, series_star
from .tables import RenderedTable, build_table

__all__ = [
    "DMonomial", "d_cell", "d_value", "lucas_binom", "u_at",
    "Decomposition", "b_table", "decompose", "interval_index",
    "FieldContext", "FqElem", "field_new", "pow_int",
    "Params", "Series", "binom_power", "make_params",
    "series_alpha", "series_L_direct", "series_Pi", "series_star",
    "RenderedTable", "build_table",
]
