"""Parity classes, 2-adic partition and tree enumerations of the rationals."""

from .rational import (
    INF,
    Parity,
    ParityOutcome,
    ZeroDenominatorError,
    add,
    classify,
    is_uneven,
    make_rational,
    mul,
    neg,
    nu,
    nu2,
    parity_add,
    parity_mul,
    sub,
)
from .partition import (
    CosetRep,
    DyadicForm,
    coset_equal,
    coset_rep,
    coset_reps,
    dense_witness,
    dyadic_decompose,
    in_QK,
    level,
)
from .trees import (
    SB_INFINITY,
    cw_children,
    cw_parity_at,
    cw_parity_row,
    cw_row,
    cw_sequence,
    mediant,
    mediant_parity,
    parity_transfer,
    sb_level,
    sb_parity_level,
)
from .density import (
    DensityReport,
    Ordering,
    density_report,
    f_reorder,
    farey,
    full_Q_order,
    h_reorder,
    list_order,
)

__version__ = "0.1.0"
