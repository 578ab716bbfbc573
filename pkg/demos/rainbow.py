"""
Rainbow matchings in colorings of the 2-sets
=============================================

Colour every set of a matching-free base with its own colour and lump the
rest together; no rainbow matching appears.  The coloring oracle finds the
largest such number of colours on a handful of points.
"""

from xfam import find_rainbow_matching, is_star_like
from xfam import constructions as C
from xfam import formulas as F
from xfam.core.textio import format_coloring
from xfam.oracles import max_no_s_matching, max_rainbow_free_colors

n, k, s = 7, 2, 3
base = max_no_s_matching(n, k, s - 1).witness
col = C.ar_lower_coloring(n, k, s, base)
print(col, "rainbow 3-matching:", find_rainbow_matching(col, s))
print("star-like:", is_star_like(col, s))
print(format_coloring(C.ar_lower_coloring(5, 2, 3, C.star_family(5, 2))))

# exact values where the search fits; on [4] the only disjoint pairs are
# the three perfect matchings, so each may keep one colour of its own
for n, s in [(4, 2), (5, 2), (6, 2)]:
    rep = max_rainbow_free_colors(n, 2, s)
    print(f"ar({n},2,{s}) = {rep.extra['ar']}, e_2({n},{s - 1}) + 2 = {max_no_s_matching(n, 2, s - 1).optimum + 2}")

# the two upper bounds, exact rationals
e = max_no_s_matching(10, 2, 2).optimum
print(F.ar_upper_simple(10, 2, 3, e), F.ar_upper_refined(10, 2, 3, e))
