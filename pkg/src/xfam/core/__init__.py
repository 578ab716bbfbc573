"""Ground sets, families and the combinatorial operators defined on them."""

from .matchings import (
    are_cross_dependent,
    are_q_dependent,
    covering_number,
    find_almost_matching,
    find_disjoint_representatives,
    find_rainbow_matching,
    has_almost_matching,
    is_star_like,
    matching_number,
    minimum_cover,
)
from .operators import (
    deletion_of_last,
    family_trace,
    fully_shift,
    is_shifted,
    is_up_set,
    link_of_last,
    shadow,
    shift_family,
    shift_set,
    up_closure,
)
from .textio import (
    format_coloring,
    format_family,
    parse_coloring,
    parse_family,
    read_coloring,
    read_family,
    write_coloring,
    write_family,
)
from .types import Coloring, ElementSet, MatchingWitness, SetFamily, k_layer, power_set

__all__ = [
    "Coloring",
    "ElementSet",
    "MatchingWitness",
    "SetFamily",
    "are_cross_dependent",
    "are_q_dependent",
    "covering_number",
    "deletion_of_last",
    "family_trace",
    "find_almost_matching",
    "find_disjoint_representatives",
    "find_rainbow_matching",
    "format_coloring",
    "format_family",
    "fully_shift",
    "has_almost_matching",
    "is_shifted",
    "is_star_like",
    "is_up_set",
    "k_layer",
    "link_of_last",
    "matching_number",
    "minimum_cover",
    "parse_coloring",
    "parse_family",
    "power_set",
    "read_coloring",
    "read_family",
    "shadow",
    "shift_family",
    "shift_set",
    "up_closure",
    "write_coloring",
    "write_family",
]
