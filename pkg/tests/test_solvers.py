import itertools

import pytest
from hypothesis import given, settings, strategies as st

from lcwis.core import WeightedAlphabet, is_subsequence, is_weakly_increasing, total_weight
from lcwis.solvers import lcwis, lcwis_oracle, wlcwis, wlcwis_oracle

from conftest import PAPER_A, PAPER_B, small_seqs


def test_paper_example_with_witness():
    res = lcwis(PAPER_A, PAPER_B, want_witness=True)
    assert res.value == 3
    assert list(res.witness) == [2, 2, 3]


def test_value_only_has_no_witness():
    assert lcwis(PAPER_A, PAPER_B).witness is None


@pytest.mark.parametrize("a, b, expected", [([], [1, 2, 3], 0), ([4, 4, 4], [4, 4, 4], 3), ([1, 2], [3, 4], 0)])
def test_lcwis_small(a, b, expected):
    assert lcwis(a, b).value == expected
    assert lcwis_oracle(a, b) == expected


def test_empty_witness():
    assert lcwis([], [1], want_witness=True).witness == ()


def test_wlcwis_examples():
    unit = WeightedAlphabet.unit(set(PAPER_A + PAPER_B))
    assert wlcwis(PAPER_A, PAPER_B, unit).value == 3
    assert wlcwis([5], [5], WeightedAlphabet({5: 7})).value == 7
    assert wlcwis_oracle([3], [3], WeightedAlphabet({3: 9})) == 9


def test_wlcwis_missing_weight():
    with pytest.raises(KeyError):
        wlcwis([1, 2], [2], WeightedAlphabet({2: 1}))
    with pytest.raises(KeyError):
        wlcwis_oracle([1, 2], [2], WeightedAlphabet({2: 1}))


def test_oracle_length_bound():
    with pytest.raises(ValueError):
        lcwis_oracle(list(range(15)), list(range(15)))
    # only the shorter side is bounded
    assert lcwis_oracle([1, 2], list(range(40))) == 2


def test_weakly_increasing_is_not_strict():
    # strictly increasing LCIS would be 1 here
    assert lcwis([2, 2, 2], [2, 2]).value == 2


def _brute_force_pairs(a, b):
    """Max over all index subsets of a, independent of both oracle and DP."""
    best = 0
    for r in range(len(a) + 1):
        for idx in itertools.combinations(range(len(a)), r):
            c = [a[i] for i in idx]
            if is_weakly_increasing(c) and is_subsequence(c, b):
                best = max(best, len(c))
    return best


def test_oracle_matches_subset_enumeration(rng):
    for _ in range(150):
        a = [rng.randrange(4) for _ in range(rng.randint(0, 8))]
        b = [rng.randrange(4) for _ in range(rng.randint(0, 8))]
        assert lcwis_oracle(a, b) == _brute_force_pairs(a, b)


def test_oracle_equivalence_seeded(rng):
    for _ in range(200):
        k = rng.randint(1, 4)
        a = [rng.randrange(k) for _ in range(rng.randint(0, 10))]
        b = [rng.randrange(k) for _ in range(rng.randint(0, 10))]
        assert lcwis(a, b).value == lcwis_oracle(a, b) == lcwis_oracle(b, a)


weights = st.dictionaries(st.integers(0, 4), st.integers(1, 6), min_size=5, max_size=5).map(
    lambda d: WeightedAlphabet({k: d.get(k, 1) for k in range(5)})
)


@settings(max_examples=300)
@given(small_seqs(), small_seqs(), weights)
def test_weighted_properties(a, b, w):
    res = wlcwis(a, b, w, want_witness=True)
    assert res.value == wlcwis_oracle(a, b, w)
    assert res.value == wlcwis(b, a, w).value
    assert res.value <= min(total_weight(a, w), total_weight(b, w))
    wit = res.witness
    assert is_weakly_increasing(wit)
    assert is_subsequence(wit, a) and is_subsequence(wit, b)
    assert total_weight(wit, w) == res.value


@settings(max_examples=300)
@given(small_seqs(), small_seqs())
def test_unweighted_properties(a, b):
    res = lcwis(a, b, want_witness=True)
    assert res.value == lcwis(b, a).value
    assert 0 <= res.value <= min(len(a), len(b))
    assert res.value == wlcwis(a, b, WeightedAlphabet.unit(range(5))).value
    assert len(res.witness) == res.value
    assert is_subsequence(res.witness, a) and is_subsequence(res.witness, b)


@given(small_seqs(), small_seqs(), st.data())
def test_monotone_under_subsequence(a, b, data):
    keep = data.draw(st.lists(st.booleans(), min_size=len(a), max_size=len(a)))
    sub = [x for x, k in zip(a, keep) if k]
    assert lcwis(sub, b).value <= lcwis(a, b).value


def test_large_inputs_value_matches_witness_mode(rng):
    a = [rng.randrange(30) for _ in range(400)]
    b = [rng.randrange(30) for _ in range(300)]
    full = lcwis(a, b, want_witness=True)
    assert full.value == lcwis(a, b).value == lcwis(b, a).value
    assert len(full.witness) == full.value
    assert is_weakly_increasing(full.witness)
    assert is_subsequence(full.witness, a) and is_subsequence(full.witness, b)


def test_witness_is_deterministic():
    a, b = [1, 1, 2, 2], [2, 1, 2, 1]
    assert lcwis(a, b, True).witness == lcwis(a, b, True).witness
