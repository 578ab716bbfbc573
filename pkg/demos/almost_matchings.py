"""
Almost matchings and threshold families
========================================

An almost matching may share a single point between two of its sets.  On
[sm - 2] the sets of size at least m avoid every almost matching of size s,
and the oracle finds nothing larger.
"""

from xfam import has_almost_matching, shadow
from xfam import constructions as C
from xfam import formulas as F
from xfam.oracles import max_almost_matching_free, verify_shadow_lemma

for s, m in [(2, 2), (2, 3), (3, 2)]:
    n = s * m - 2
    rep = max_almost_matching_free(n, s)
    t = C.threshold_family(n, m)
    print(f"a({n},{s}) = {rep.optimum}, formula {F.almost_matching_value(s, m)}, "
          f"{rep.witness_count} optimal families, threshold contains none: {not has_almost_matching(t, s)}")

# on [2] any single set is optimal; among up-sets only {1,2} is
print(max_almost_matching_free(2, 2).extra["class_representatives"])
print(max_almost_matching_free(2, 2, mode="upsets").witnesses)

# with m = 1 the empty set can join the threshold family
print(max_almost_matching_free(1, 3).optimum, F.almost_matching_value(3, 1))

# shadows of up-sets: the threshold family has the smallest one
t = C.threshold_family(4, 2)
print(len(t), len(shadow(t)))
for n in range(2, 6):
    print(n, verify_shadow_lemma(n).notes[0])
