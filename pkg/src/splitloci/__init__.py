"""Splitting-type stratifications of Picard varieties of general k-gonal curves."""
from .brill_noether import (
    BNContext,
    StratumReport,
    maximal_strata_bruteforce,
    rho,
    rho_k,
    u_wrl_closed_form,
    w_rl,
    wrd_decomposition,
)
from .errors import SplitLociError
from .splitting_core import (
    HilbertProfile,
    SplittingType,
    balanced,
    dominance_leq,
    h0_end,
    h0_twist,
    hilbert_profile,
    make_type,
    serre_dual,
    type_from_hilbert,
    u,
)
from .strat_poset import StratPoset, build_poset, downset, expected_dimension, export_dot
from .theta_calc import ClassResult, ThetaPoly, dual_class, exp_series, extreme_summand_class, kkl_check, point_count

__version__ = "0.1.0"
