"""Exhaustive and branch-and-bound searches for the extremal quantities.

Every search either finishes and reports an exact optimum with witnesses
or raises :class:`~xfam.errors.CapacityError`; nothing is silently
truncated.  The per-search node budget defaults to
``DEFAULT_MAX_NODES`` and can be changed through ``XFAM_MAX_NODES``.
"""

from ._engine import DEFAULT_MAX_NODES, SearchReport, StatementCheck
from .almost import max_almost_matching_free
from .dependence import max_cross_dependent_sum, max_q_dependent_sum
from .matching import max_no_s_matching, max_no_s_matching_with_tau
from .rainbow import max_rainbow_free_colors
from .statements import verify_lemma61, verify_prop2, verify_shadow_lemma
from .upsets import shifted_upset_indicators, upset_indicators

__all__ = [
    "DEFAULT_MAX_NODES",
    "SearchReport",
    "StatementCheck",
    "max_almost_matching_free",
    "max_cross_dependent_sum",
    "max_no_s_matching",
    "max_no_s_matching_with_tau",
    "max_q_dependent_sum",
    "max_rainbow_free_colors",
    "shifted_upset_indicators",
    "upset_indicators",
    "verify_lemma61",
    "verify_prop2",
    "verify_shadow_lemma",
]
