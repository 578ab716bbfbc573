"""
Cross-dependent families on small ground sets
==============================================

Build the threshold tuple, compare its total size with the closed form, and
let the exhaustive oracle confirm that nothing larger exists.
"""

from xfam import are_cross_dependent, are_q_dependent
from xfam import constructions as C
from xfam import formulas as F
from xfam.oracles import max_cross_dependent_sum, max_q_dependent_sum

# three families on [4]: n = 4 = s*m + s - l with s=3, m=1, l=2
s, m, l = 3, 1, 2
tuple_ = C.tilde_families(s, m, l)
print("sizes:", [len(f) for f in tuple_], "total", sum(map(len, tuple_)))
print("cross-dependent:", are_cross_dependent(tuple_))
print("closed form:", F.theorem2_rhs(s, m, l))

# the oracle searches every tuple of up-sets, completing the last family greedily
rep = max_cross_dependent_sum(4, 3)
print("oracle optimum:", rep.optimum, "with", rep.witness_count, "optimal tuples")
print("first witness:", [f.to_lists() for f in rep.witness])

# q-dependence only forbids small representative systems
for q in range(1, 5):
    r = max_q_dependent_sum(4, 2, q)
    print(f"q={q}: oracle {r.optimum}, bound {F.q_dependent_bound(4, 2, q)}")

# the same tuple on a larger ground set stays q-dependent for q = 4
big = C.tilde_families(s, m, l, n=6)
print("on [6]:", sum(map(len, big)), "=", F.theorem7_rhs(6, s, m, l), "q-dependent:", are_q_dependent(big, 4))

# shifted up-sets reach n = 6 for pairs and triples
print(max_cross_dependent_sum(6, 3, mode="shifted-upsets").optimum, F.cross_dependent_bound(6, 3))
