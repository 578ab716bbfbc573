"""
Uniform families without large matchings
=========================================

Intersecting families, the candidate extremal families for three pairwise
disjoint pairs, and families whose covering number is forced up.
"""

from xfam import covering_number, fully_shift, matching_number
from xfam import constructions as C
from xfam import formulas as F
from xfam.oracles import max_no_s_matching, max_no_s_matching_with_tau

# two pairwise disjoint sets forbidden: the star is best
for n, k in [(6, 2), (7, 3)]:
    rep = max_no_s_matching(n, k, 2)
    print(f"e_{k}({n},2) = {rep.optimum}, C(n-1,k-1) = {F.ekr_value(n, k)}, mode {rep.params['mode']}")

# three disjoint pairs forbidden: a star of two centres or a clique on five points
for n in range(6, 10):
    a1 = C.frankl_family(n, 2, 2, 1)
    a2 = C.frankl_family(n, 2, 2, 2)
    print(n, len(a1), len(a2), max_no_s_matching(n, 2, 3).optimum)

# forcing tau >= s rules out stars
hm = C.hm_family(7, 2, 2)
print("hm family:", len(hm), "nu", matching_number(hm), "tau", covering_number(hm), "value", F.hm_value(7, 2, 2))
rep = max_no_s_matching_with_tau(6, 2, 3)
print("h(6,2,3) =", rep.optimum, rep.witness.to_lists())

# shifting keeps the size and never helps a matching
f = C.hm_family(8, 2, 2)
g = fully_shift(f)
print(len(f), len(g), matching_number(f), matching_number(g), covering_number(g))
