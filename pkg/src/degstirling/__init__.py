"""Exact degenerate Stirling numbers, boson normal ordering and identity checks."""

from .boson import (
    NPoly,
    NormalForm,
    deg_power_number_op,
    inverse_normal_expansion,
    monomial_action,
    nf_mul,
    npoly_to_nf,
    sandwich,
    word_to_normal,
)
from .exactnum import LAM, LambdaPoly, parse_rational
from .factorials import binomial, classical_falling, deg_falling, deg_rising
from .identities import check_all
from .report import IdentityReport
from .series import TruncatedSeries, degenerate_exp, gf_check
from .stirling import Kind, StirlingTable, build_s1_table, build_s2_table, s1_oracle, s2_oracle

__version__ = "0.1.0"
