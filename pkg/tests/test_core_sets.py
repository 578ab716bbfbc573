from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from xfam import (
    Coloring,
    ElementSet,
    SetFamily,
    are_cross_dependent,
    are_q_dependent,
    covering_number,
    deletion_of_last,
    family_trace,
    find_almost_matching,
    find_disjoint_representatives,
    find_rainbow_matching,
    fully_shift,
    has_almost_matching,
    is_shifted,
    is_star_like,
    is_up_set,
    k_layer,
    link_of_last,
    matching_number,
    minimum_cover,
    shadow,
    shift_family,
    shift_set,
    up_closure,
)
from xfam.errors import ParameterError, UndefinedCoverError


def fam(n, *sets):
    return SetFamily.from_sets(n, sets)


def es(n, *elems):
    return ElementSet.of(n, elems)


# brute-force references ----------------------------------------------------

def brute_nu(f):
    ms = list(f.masks)
    for t in range(len(ms), 0, -1):
        for combo in combinations(ms, t):
            if all(not a & b for a, b in combinations(combo, 2)):
                return t
    return 0


def brute_tau(f):
    n = f.ground_n
    for t in range(n + 1):
        for combo in combinations(range(n), t):
            c = sum(1 << b for b in combo)
            if all(a & c for a in f.masks):
                return t


def brute_dependent(fams, q=None):
    for reps in __import__("itertools").product(*(f.masks for f in fams)):
        u = 0
        ok = True
        for a in reps:
            if a & u:
                ok = False
                break
            u |= a
        if ok and (q is None or u.bit_count() <= q):
            return False
    return True


def brute_almost(f, s):
    for combo in combinations(f.masks, s):
        deg = {}
        for a in combo:
            for b in range(f.ground_n):
                if a >> b & 1:
                    deg[b] = deg.get(b, 0) + 1
        high = [d for d in deg.values() if d > 1]
        if len(high) <= 1 and all(d == 2 for d in high):
            return True
    return False


families = st.integers(1, 5).flatmap(
    lambda n: st.sets(st.integers(0, (1 << n) - 1), max_size=10).map(lambda ms: SetFamily(n, ms))
)


# types ---------------------------------------------------------------------

def test_element_set_rejects_out_of_range():
    with pytest.raises(ParameterError):
        ElementSet.of(3, [4])
    with pytest.raises(ParameterError):
        ElementSet(3, 0b1000)
    with pytest.raises(ParameterError):
        ElementSet(65, 0)


def test_family_is_canonical_and_deduplicated():
    f = fam(3, [2, 3], [1], [3], [1])
    assert f.to_lists() == [[1], [3], [2, 3]]
    assert len(f) == 3
    assert [2, 3] in f and [1, 2] not in f


def test_coloring_must_partition_layer():
    with pytest.raises(ParameterError):
        Coloring(3, 2, [[[1, 2]], [[1, 3]]])
    with pytest.raises(ParameterError):
        Coloring(3, 2, [[[1, 2], [1, 3]], [[1, 3], [2, 3]]])
    with pytest.raises(ParameterError):
        Coloring(3, 2, [[[1, 2], [1, 3], [2, 3]], []])
    c = Coloring(3, 2, [[[1, 2]], [[1, 3], [2, 3]]])
    assert c.color_of([2, 3]) == 2 and c.num_colors == 2


# shifting ------------------------------------------------------------------

@pytest.mark.parametrize(
    "a, expected", [((2, 3), (1, 3)), ((1, 2), (1, 2)), ((3,), (3,))]
)
def test_shift_set(a, expected):
    assert shift_set(es(3, *a), 1, 2) == es(3, *expected)


def test_shift_set_rejects_bad_pair():
    with pytest.raises(ParameterError):
        shift_set(es(3, 1), 2, 1)
    with pytest.raises(ParameterError):
        shift_set(es(3, 1), 1, 4)


@pytest.mark.parametrize(
    "before, after",
    [
        ([[2]], [[1]]),
        ([[1], [2]], [[1], [2]]),
        ([[2, 3], [1, 3]], [[1, 3], [2, 3]]),
    ],
)
def test_shift_family(before, after):
    assert shift_family(fam(3, *before), 1, 2) == fam(3, *after)


def test_fully_shift_examples():
    assert fully_shift(fam(2, [2])) == fam(2, [1])
    assert fully_shift(fam(4, [3, 4])) == fam(4, [1, 2])
    star = fam(4, [1, 2], [1, 3], [1, 4])
    assert fully_shift(star) == star


@given(families)
def test_shift_keeps_size_and_does_not_raise_nu(f):
    n = f.ground_n
    for i, j in combinations(range(1, n + 1), 2):
        g = shift_family(f, i, j)
        assert len(g) == len(f)
        assert sorted(a.bit_count() for a in g.masks) == sorted(a.bit_count() for a in f.masks)
        assert matching_number(g) <= matching_number(f)
    g = fully_shift(f)
    assert is_shifted(g) and len(g) == len(f)


@given(families)
def test_is_shifted_agrees_with_definition(f):
    n = f.ground_n
    fixed = all(shift_family(f, i, j) == f for i, j in combinations(range(1, n + 1), 2))
    assert is_shifted(f) == fixed


# up-sets and shadows -------------------------------------------------------

def test_up_set_examples():
    assert is_up_set(fam(2, [1], [1, 2]))
    assert not is_up_set(fam(2, [1]))
    assert up_closure(fam(2, [1])) == fam(2, [1], [1, 2])


@given(families)
def test_up_closure_is_smallest_up_set(f):
    g = up_closure(f)
    assert is_up_set(g)
    assert all(any(a & b == a for a in f.masks) for b in g.masks)


def test_shadow_examples():
    assert shadow(fam(3, [1, 2, 3])) == fam(3, [1, 2], [1, 3], [2, 3])
    assert shadow(fam(1, [1])) == fam(1, [])
    assert len(shadow(SetFamily(3))) == 0


# nu and tau ----------------------------------------------------------------

def test_matching_number_examples():
    assert matching_number(fam(6, [1, 2], [3, 4], [5, 6])) == 3
    assert matching_number(fam(4, [1, 2], [1, 3], [1, 4])) == 1
    assert matching_number(fam(1, [], [1])) == 2
    assert matching_number(SetFamily(3)) == 0


@given(families)
def test_matching_number_matches_brute_force(f):
    assert matching_number(f) == brute_nu(f)


def test_covering_number_examples():
    assert covering_number(fam(3, [1, 2], [1, 3])) == 1
    assert covering_number(fam(3, [1, 2], [1, 3], [2, 3])) == 2
    assert covering_number(SetFamily(3)) == 0
    with pytest.raises(UndefinedCoverError):
        covering_number(fam(2, [], [1]))


@given(families.filter(lambda f: 0 not in f.maskset))
def test_minimum_cover_is_a_minimum_transversal(f):
    t = minimum_cover(f)
    assert all(a & t.members for a in f.masks)
    assert len(t) == brute_tau(f)


@given(families.filter(lambda f: 0 not in f.maskset and len(f) > 0))
def test_tau_one_iff_star(f):
    common = (1 << f.ground_n) - 1
    for a in f.masks:
        common &= a
    assert (covering_number(f) == 1) == bool(common)


# dependence ----------------------------------------------------------------

def test_cross_dependent_examples():
    assert are_cross_dependent([fam(2, [1]), fam(2, [1])])
    w = find_disjoint_representatives([fam(2, [1]), fam(2, [2])])
    assert w is not None and w.to_lists() == [[1], [2]]
    sets = fam(3, [1, 2], [1, 3], [2, 3], [1, 2, 3])
    assert are_cross_dependent([sets] * 3)
    with pytest.raises(ParameterError):
        are_cross_dependent([fam(2, [1]), fam(3, [1])])


def test_q_dependent_examples():
    assert not are_q_dependent([fam(3, [1]), fam(3, [2])], 2)
    assert are_q_dependent([fam(3, [1]), fam(3, [2, 3])], 2)
    with pytest.raises(ParameterError):
        are_q_dependent([fam(3, [1]), fam(3, [2])], 4)
    with pytest.raises(ParameterError):
        are_q_dependent([fam(3, [1]), fam(3, [2])], 0)


tuples = st.integers(1, 4).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.sets(st.integers(0, (1 << n) - 1), max_size=6), min_size=2, max_size=3),
        st.integers(1, n),
    )
)


@given(tuples)
def test_dependence_matches_brute_force(data):
    n, sets, q = data
    fs = [SetFamily(n, s) for s in sets]
    assert are_cross_dependent(fs) == brute_dependent(fs)
    assert are_q_dependent(fs, q) == brute_dependent(fs, q)
    assert are_q_dependent(fs, n) == are_cross_dependent(fs)
    w = find_disjoint_representatives(fs, q)
    if w is not None:
        assert all(a.members in f.maskset for a, f in zip(w.sets, fs))
        u = 0
        for a in w.sets:
            assert not a.members & u
            u |= a.members
        assert u.bit_count() <= q


def test_empty_set_may_represent_several_families():
    e = fam(2, [])
    assert not are_cross_dependent([e, e, e])


# traces --------------------------------------------------------------------

def test_trace_examples():
    g = fam(4, [1, 2], [2, 3], [3, 4])
    assert family_trace(g, es(4, 2), 2) == fam(4, [3])
    assert family_trace(g, es(4), 2) == fam(4, [3, 4])
    assert family_trace(g, es(4, 2), 2, reindex=True) == fam(2, [1])
    assert deletion_of_last(fam(4, [1], [4])) == fam(3, [1])
    assert link_of_last(fam(4, [1], [4], [2, 4])) == fam(3, [], [2])
    with pytest.raises(ParameterError):
        family_trace(g, es(4, 3), 2)


@given(families, st.data())
def test_trace_partition_sums_to_size(f, data):
    p = data.draw(st.integers(0, f.ground_n))
    total = sum(len(family_trace(f, ElementSet(f.ground_n, q), p)) for q in range(1 << p))
    assert total == len(f)


# almost matchings ----------------------------------------------------------

def test_almost_matching_examples():
    assert has_almost_matching(fam(2, [1], [1, 2]), 2)
    assert not has_almost_matching(fam(3, [1, 2], [1, 3], [2, 3]), 3)
    assert has_almost_matching(fam(4, [1, 2], [3, 4]), 2)
    assert not has_almost_matching(fam(2, [1]), 2)


@given(families, st.integers(1, 4))
def test_almost_matching_matches_brute_force(f, s):
    assert has_almost_matching(f, s) == brute_almost(f, s)
    w = find_almost_matching(f, s)
    assert (w is not None) == has_almost_matching(f, s)
    if w is not None:
        assert len({a.members for a in w.sets}) == s
        assert brute_almost(SetFamily(f.ground_n, [a.members for a in w.sets]), s)


# rainbow matchings and star-likeness ---------------------------------------

def two_class(n, k, first):
    first = SetFamily.from_sets(n, first)
    rest = SetFamily(n, [a for a in k_layer(n, k).masks if a not in first.maskset])
    return Coloring(n, k, [first, rest])


def brute_rainbow(c, s):
    layer = k_layer(c.ground_n, c.k).masks
    for combo in combinations(layer, s):
        if all(not a & b for a, b in combinations(combo, 2)):
            if len({c.color_of(a) for a in combo}) == s:
                return True
    return False


def test_rainbow_examples():
    w = find_rainbow_matching(two_class(4, 2, [[1, 2]]), 2)
    assert w is not None and w.to_lists() == [[1, 2], [3, 4]]
    assert sorted(w.class_labels) == [1, 2]
    single = Coloring(4, 2, [k_layer(4, 2)])
    assert find_rainbow_matching(single, 2) is None
    star = [[1, j] for j in range(2, 6)]
    assert find_rainbow_matching(two_class(5, 2, star), 2) is not None


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 6), st.integers(2, 3), st.randoms(use_true_random=False))
def test_rainbow_matches_brute_force(n, s, rnd):
    layer = list(k_layer(n, 2).masks)
    M = rnd.randint(1, len(layer))
    rnd.shuffle(layer)
    labels = list(range(M)) + [rnd.randrange(M) for _ in range(len(layer) - M)]
    classes = [SetFamily(n, [a for a, l in zip(layer, labels) if l == c]) for c in range(M)]
    c = Coloring(n, 2, classes)
    w = find_rainbow_matching(c, s)
    assert (w is not None) == brute_rainbow(c, s)
    if w is not None:
        assert len(set(w.class_labels)) == s
        assert [c.color_of(a) for a in w.sets] == list(w.class_labels)


def test_star_like_examples():
    assert is_star_like(two_class(5, 2, [[1, 2]]), 2) is None
    assert is_star_like(Coloring(4, 2, [k_layer(4, 2)]), 2) is not None
    # every class but the first meets {1}
    rest = [a for a in k_layer(5, 2).masks if not a & 1]
    star = [a for a in k_layer(5, 2).masks if a & 1]
    c = Coloring(5, 2, [SetFamily(5, rest)] + [SetFamily(5, [a]) for a in star])
    y, label = is_star_like(c, 3)
    assert y == es(5, 1) and label == 1


def test_star_like_brute_force_small():
    n, k, s = 5, 2, 3
    rest = [a for a in k_layer(n, k).masks if a & 0b11 == 0b11 or not a & 0b10]
    others = [a for a in k_layer(n, k).masks if a not in rest]
    c = Coloring(n, k, [SetFamily(n, rest)] + [SetFamily(n, [a]) for a in others])
    expected = None
    for y in combinations(range(n), s - 2):
        ym = sum(1 << b for b in y)
        for label in range(1, c.num_colors + 1):
            if all(a & ym for i, cl in enumerate(c.classes, 1) if i != label for a in cl.masks):
                expected = expected or (ym, label)
    got = is_star_like(c, s)
    assert (got is None) == (expected is None)
    if got is not None:
        y, label = got
        assert all(a & y.members for i, cl in enumerate(c.classes, 1) if i != label for a in cl.masks)


def test_permutation_invariance_of_nu():
    f = fam(4, [1, 2], [2, 3], [3, 4], [1, 4])
    for perm in permutations(range(4)):
        g = SetFamily(4, [sum(1 << perm[b] for b in range(4) if a >> b & 1) for a in f.masks])
        assert matching_number(g) == 2
