from itertools import combinations_with_replacement
from math import factorial, prod

import pytest

import oracles
from curvecount.irreducible import (
    ComponentProfile,
    InconsistentSumError,
    count_irr,
    decompositions,
    product_degree,
    reducible_part,
)
from curvecount.severi import CountTable, all_keys, arithmetic_genus, count, dimension, key
from curvecount.tally import Tally, enumerate_with_weight, sub_tallies, tally


@pytest.fixture(scope="module")
def memo():
    return CountTable()


@pytest.mark.parametrize(
    "args, want",
    [
        ((4, 3, 0, 4), 620),
        ((4, 3, 2, 2), 620),
        ((4, 3, 3, 1), 584),
        ((3, 1, 0, 3), 12),
        ((2, 1, 0, 2), 0),
        ((2, 0, 0, (0, 1)), 2),
        ((1, 0, 0, 1), 1),
    ],
)
def test_known_values(memo, args, want):
    assert count_irr(key(*args), memo) == want


def test_differences_with_reducible_counts(memo):
    assert reducible_part(key(4, 3, 2, 2), memo) == 54
    assert reducible_part(key(4, 3, 3, 1), memo) == 52


@pytest.mark.parametrize("d", range(1, 6))
def test_rational_curves_match_kontsevich(memo, d):
    assert count_irr(key(d, arithmetic_genus(d), 0, d), memo) == oracles.kontsevich(d)


@pytest.mark.parametrize("d", range(1, 5))
def test_irreducible_bounded_by_all(memo, d):
    for k in all_keys(d):
        irr = count_irr(k, memo)
        assert 0 <= irr <= count(k, memo)
        if k.delta == 0:
            # smooth plane curves are irreducible
            assert irr == count(k, memo)


def _assembled_count(d, delta, memo):
    """Reducible-or-not curves through points, assembled from irreducible pieces.

    A curve through general points is a union of irreducible components, each
    through as many of the points as its own dimension; distinct components
    of degrees d_i and d_j meet in d_i d_j nodes.
    """
    total = 0
    for parts in range(1, d + 1):
        for degs in combinations_with_replacement(range(1, d + 1), parts):
            if sum(degs) != d:
                continue
            cross = sum(degs[i] * degs[j] for i in range(parts) for j in range(i + 1, parts))
            own = delta - cross
            if own < 0:
                continue
            total += _distribute(degs, own, memo)
    return total


def _distribute(degs, own, memo):
    """Sum over node splittings among components of equal or growing degree."""
    out = 0

    def rec(i, left, chosen):
        nonlocal out
        if i == len(degs):
            if left:
                return
            profile = list(zip(degs, chosen))
            dims = [dd * (dd + 3) // 2 - dl for dd, dl in profile]
            # components with identical (degree, nodes) are interchangeable
            sigma = prod(factorial(profile.count(p)) for p in set(profile))
            ways = factorial(sum(dims))
            for x in dims:
                ways //= factorial(x)
            out += ways * prod(count_irr(key(dd, dl, 0, dd), memo) for dd, dl in profile) // sigma
            return
        lo = chosen[-1] if i and degs[i] == degs[i - 1] else 0
        for dl in range(lo, min(left, arithmetic_genus(degs[i])) + 1):
            rec(i + 1, left - dl, chosen + [dl])

    rec(0, own, [])
    return out


@pytest.mark.parametrize("d", range(1, 6))
def test_point_counts_assemble_from_irreducible_components(memo, d):
    for delta in range(0, d * (d - 1) // 2 + 1):
        assert count(key(d, delta, 0, d), memo) == _assembled_count(d, delta, memo), (d, delta)


def test_decompositions_have_codimension_one():
    for d in range(2, 5):
        for k in all_keys(d):
            for dec in decompositions(k):
                assert sum(p.dim for p in dec.profiles) == dimension(k) - 1


def _brute_force_decompositions(k):
    """Every multiset of component profiles meeting the decomposition rules.

    Profiles range over all degrees below ``d``, all node counts up to the
    arithmetic genus and all contact tallies of the right weight (no single
    component may use more fixed points than ``alpha`` offers); multisets are
    grown with repetition under the degree budget and then filtered.
    """
    profiles = []
    for dl in range(1, k.d):
        for nodes in range(arithmetic_genus(dl) + 1):
            for wa in range(dl + 1):
                for a in enumerate_with_weight(wa):
                    if not a <= k.alpha:
                        continue
                    for b in enumerate_with_weight(dl - wa):
                        for g in sub_tallies(b):
                            if g.weight:
                                profiles.append(ComponentProfile(dl, nodes, a, b, g))
    found = set()

    def check(combo):
        size = len(combo)
        alpha2 = sum((p.alpha for p in combo), Tally())
        if not alpha2 <= k.alpha:
            return
        gamma = sum((p.gamma for p in combo), Tally())
        if sum((p.beta for p in combo), Tally()) != k.beta + gamma:
            return
        cross = sum(combo[i].d * combo[j].d for i in range(size) for j in range(i + 1, size))
        if sum(p.delta for p in combo) == k.delta + gamma.norm - k.d + 1 - cross:
            found.add(tuple(sorted(combo, key=ComponentProfile.sort_key)))

    # multisets as index-non-decreasing sequences with total degree d - 1
    def grow(start, left, combo):
        if left == 0:
            check(combo)
            return
        for i in range(start, len(profiles)):
            if profiles[i].d <= left:
                grow(i, left - profiles[i].d, combo + [profiles[i]])

    grow(0, k.d - 1, [])
    return found


@pytest.mark.parametrize(
    "args",
    [(3, 1, 1, 2), (2, 0, 0, 2), (4, 3, 2, 2), (4, 2, (0, 1), (0, 1)), (4, 3, (2, 1), ()), (5, 4, (3, 1), ())],
)
def test_decompositions_match_brute_force(args):
    k = key(*args)
    got = [dec.profiles for dec in decompositions(k)]
    assert len(got) == len(set(got)), "a multiset was emitted twice"
    assert set(got) == _brute_force_decompositions(k)


def test_documented_decompositions():
    profile = ComponentProfile(3, 1, Tally(), tally(3), tally(1))
    assert (profile,) in {dec.profiles for dec in decompositions(key(4, 3, 2, 2))}
    for dec in decompositions(key(2, 0, 0, 2)):
        assert all(p.d == 1 and p.delta == 0 for p in dec.profiles)


def test_component_profile_validation():
    with pytest.raises(ValueError):
        ComponentProfile(2, 0, tally(1), tally(1), tally())
    with pytest.raises(ValueError):
        ComponentProfile(2, 1, tally(), tally(2), tally(1))
    p = ComponentProfile(2, 0, tally(), tally(2), tally(1))
    assert p.key == key(2, 0, 0, 2)


def test_product_degree():
    assert product_degree([(1, 1), (8, 1)]) == 9
    assert product_degree([(2, 1), (7, 1)]) == 36
    assert product_degree([(2, 3), (2, 3)], sigma=2) == 27
    with pytest.raises(InconsistentSumError):
        product_degree([(1, 1), (1, 1)], sigma=4)
