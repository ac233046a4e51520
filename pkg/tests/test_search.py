import bisect

import pytest
from hypothesis import given, strategies as st

from rangekit.fenwick_model import FenwickModel
from rangekit.linear_model import LinearModel
from rangekit.search import (
    NO_CHILD, LookupTable, adapt_initial_split, best_split, binary_indexed,
    build_search_tree, determine_initial_split, exponential, linear_backward,
    linear_forward, log2_search, logarithmic, tree_search,
)

from conftest import REF19_COUNTS, TOY_HK, TOY_TABLE, TOY_TABLE_AFTER


def oracle_symbol(c, hk):
    """Independent reference: rightmost boundary <= c."""
    return bisect.bisect_right(hk, c) - 1


# every code value of the toy model and its symbol
TOY_CASES = [(c, oracle_symbol(c, TOY_HK)) for c in range(10)]


@pytest.mark.parametrize("c,sym", TOY_CASES)
def test_linear_scans_toy(c, sym):
    assert linear_backward(c, TOY_HK)[0] == sym
    assert linear_forward(c, TOY_HK)[0] == sym


def test_linear_probe_counts():
    k = len(TOY_HK) - 1
    for c, sym in TOY_CASES:
        assert linear_forward(c, TOY_HK)[1] == sym + 1
        assert linear_backward(c, TOY_HK)[1] == k - sym


@pytest.mark.parametrize("c,sym", TOY_CASES)
def test_logarithmic_toy(c, sym):
    assert logarithmic(c, TOY_HK)[0] == sym


def test_logarithmic_iteration_bound():
    m = LinearModel(REF19_COUNTS)
    for c in range(m.total_count):
        sym, iters = logarithmic(c, m.hk)
        assert sym == oracle_symbol(c, m.hk)
        assert iters <= 6  # ceil(log2 19) + 1


def test_best_split_balances_mass():
    # boundaries 0,3,5,6,10: j=2 splits 5 vs 5 exactly
    assert best_split(TOY_HK, 0, 4) == 2
    # ties break low
    assert best_split([0, 1, 2, 3, 4], 0, 4) == 2
    with pytest.raises(ValueError):
        best_split(TOY_HK, 1, 2)


def test_build_tree_flat_k4():
    tree = build_search_tree([0, 1, 2, 3, 4])
    assert tree.root == 2
    assert tree.left[2] == 1
    assert tree.right[2] == 3
    assert tree.left[1] == 0
    assert tree.left[0] == NO_CHILD == tree.right[0]


def test_build_tree_toy_root():
    tree = build_search_tree(TOY_HK)
    assert tree.root == 2  # splits 6 against 4, the closest to half of 10


def test_tree_search_toy():
    tree = build_search_tree(TOY_HK)
    for c, sym in TOY_CASES:
        assert tree_search(c, TOY_HK, tree)[0] == sym


def test_build_tree_skewed_does_not_recurse():
    # strictly increasing boundaries force a maximally deep tree
    hk = list(range(0, 4002, 2))
    hk[-1] += 10 ** 6  # all the mass on the last symbol
    tree = build_search_tree(hk)
    for c in (0, 1, 5, 3999, 4000, hk[-1] - 1):
        assert tree_search(c, hk, tree)[0] == oracle_symbol(c, hk)


def test_determine_initial_split():
    assert determine_initial_split(TOY_HK) == 2
    assert determine_initial_split([0, 7]) == 1
    # half the mass sits below boundary 1, neighbour check pulls back
    assert determine_initial_split([0, 6, 8, 10]) == 1


def test_adapt_initial_split_literal_branches():
    assert adapt_initial_split(19, 5, 9) == 4
    assert adapt_initial_split(19, 0, 3) == 0   # clamped low
    assert adapt_initial_split(19, 5, 2) == 6
    assert adapt_initial_split(19, 19, 2) == 19  # clamped high


@pytest.mark.parametrize("i_mid", range(1, 4))
def test_log2_search_any_split_is_correct(i_mid):
    for c, sym in TOY_CASES:
        assert log2_search(c, TOY_HK, i_mid)[0] == sym


def test_log2_first_probe_counts():
    # c = 0 with a centred split resolves faster than with a far one
    _, fast = log2_search(0, TOY_HK, 1)
    _, slow = log2_search(0, TOY_HK, 3)
    assert fast < slow


@pytest.mark.parametrize("c,sym", TOY_CASES)
def test_exponential_toy(c, sym):
    assert exponential(c, TOY_HK)[0] == sym


def test_exponential_gallop_overshoot_clamped():
    m = LinearModel(REF19_COUNTS)  # K = 19, gallop can reach 32
    for c in range(m.total_count):
        assert exponential(c, m.hk)[0] == oracle_symbol(c, m.hk)


def test_exponential_early_symbols_are_cheap():
    hk = LinearModel.flat(256).hk
    _, cheap = exponential(0, hk)
    _, costly = exponential(255, hk)
    assert cheap < costly


def test_lookup_table_create(toy_counts):
    assert LookupTable.create(toy_counts).t == TOY_TABLE
    assert LookupTable.create([0, 2]).t == [1, 1]
    with pytest.raises(ValueError):
        LookupTable.create([0, 0])


def test_lookup_table_lookup(toy_counts):
    table = LookupTable.create(toy_counts)
    for c, sym in TOY_CASES:
        assert table.lookup(c) == sym


def test_lookup_table_update(toy_counts):
    table = LookupTable.create(toy_counts)
    m = LinearModel(toy_counts)
    m.update(1)
    written = table.update(m.hk, 1)
    assert written == [5, 6, 10]
    assert table.t == TOY_TABLE_AFTER


def test_lookup_table_update_last_symbol(toy_counts):
    table = LookupTable.create(toy_counts)
    m = LinearModel(toy_counts)
    m.update(3)
    assert table.update(m.hk, 3) == [10]
    assert table.t == TOY_TABLE + [3]


@given(st.integers(1, 20), st.data())
def test_lookup_table_tracks_model(k, data):
    m = LinearModel.flat(k)
    table = LookupTable.create(m.h)
    for sym in data.draw(st.lists(st.integers(0, k - 1), max_size=30)):
        m.update(sym)
        table.update(m.hk, sym)
    assert table.t == LookupTable.create(m.h).t


def test_binary_indexed_toy(toy_counts):
    fm = FenwickModel(toy_counts)
    for c, sym in TOY_CASES:
        got, low, iters = binary_indexed(c, fm)
        assert got == sym
        assert low == TOY_HK[sym]
        assert iters == 3  # log2(4) + 1, independent of c


def test_binary_indexed_reference(ref19_counts):
    fm = FenwickModel(ref19_counts)
    hk = LinearModel(ref19_counts).hk
    for c in range(fm.total_count):
        sym, low, iters = binary_indexed(c, fm)
        assert sym == oracle_symbol(c, hk)
        assert low == hk[sym]
        assert iters == 5  # log2(16) + 1 for K = 19


@given(st.lists(st.integers(1, 60), min_size=1, max_size=50), st.data())
def test_all_strategies_agree(counts, data):
    m = LinearModel(counts)
    fm = FenwickModel(counts)
    hk = m.hk
    tree = build_search_tree(hk)
    table = LookupTable.create(counts)
    i_mid = determine_initial_split(hk)
    c = data.draw(st.integers(0, m.total_count - 1))
    want = oracle_symbol(c, hk)
    assert linear_forward(c, hk)[0] == want
    assert linear_backward(c, hk)[0] == want
    assert logarithmic(c, hk)[0] == want
    assert log2_search(c, hk, i_mid)[0] == want
    assert exponential(c, hk)[0] == want
    assert tree_search(c, hk, tree)[0] == want
    assert table.lookup(c) == want
    assert binary_indexed(c, fm)[0] == want
