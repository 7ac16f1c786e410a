import itertools
from fractions import Fraction
from math import comb, isclose

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mixedcayley.bounds import (
    AC_FORMS,
    ACBoundParams,
    ac_bound,
    ac_bound_r1,
    ac_bound_shift,
    applicable_forms,
    bipartite_mixed_bound,
    bipartite_mixed_recurrence,
    delannoy,
    emit_table1,
    mixed_moore_bound,
    mixed_moore_recurrence,
    moore_tree_layers,
    table1_csv,
)
from mixedcayley.errors import Unsupported


def count_words(r1, r2, z, k):
    """Number of exponent vectors of length <= k: involutions used 0/1 times,
    pairs any integer, arcs any non-negative integer."""
    total = 0
    ranges = [range(2)] * r1 + [range(-k, k + 1)] * r2 + [range(k + 1)] * z
    for v in itertools.product(*ranges):
        if sum(abs(x) for x in v) <= k:
            total += 1
    return total


def delannoy_paths(t, k):
    """Lattice paths (0,0) -> (t,k) with E, N and NE steps."""
    table = [[0] * (k + 1) for _ in range(t + 1)]
    for i in range(t + 1):
        for j in range(k + 1):
            if i == 0 or j == 0:
                table[i][j] = 1
            else:
                table[i][j] = table[i - 1][j] + table[i][j - 1] + table[i - 1][j - 1]
    return table[t][k]


@pytest.mark.parametrize("r1,r2,z", [p for p in itertools.product(range(3), range(3), range(3)) if sum(p)])
def test_ac_bound_counts_exponent_vectors(r1, r2, z):
    for k in range(6):
        assert ac_bound(r1, r2, z, k) == count_words(r1, r2, z, k)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 4), st.integers(0, 15))
def test_all_forms_agree(r1, r2, z, k):
    values = {ac_bound(r1, r2, z, k, form=f) for f in applicable_forms(r1, r2, z)}
    assert len(values) == 1


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 4), st.integers(0, 15))
def test_shift_invariance(r1, r2, z, k):
    p = ACBoundParams(r1, r2, z, k)
    base = ac_bound(r1, r2, z, k)
    for nu in range(-r2, min(r1, z) + 1):
        q = ac_bound_shift(p, nu)
        assert ac_bound(q.r1, q.r2, q.z, q.k) == base


def test_shift_out_of_range():
    with pytest.raises(Unsupported):
        ac_bound_shift(ACBoundParams(1, 0, 0, 3), 1)


def test_inapplicable_form():
    with pytest.raises(Unsupported):
        ac_bound(2, 0, 1, 3, form="thm_ii")
    with pytest.raises(ValueError):
        ac_bound(1, 0, 1, 3, form="nope")
    assert set(applicable_forms(1, 0, 1)) == set(AC_FORMS)


def test_spot_values():
    assert ac_bound(1, 0, 3, 2) == 14
    assert ac_bound(1, 0, 2, 4) == 25
    assert [ac_bound(1, 0, 2, k) for k in range(51)] == [(k + 1) ** 2 for k in range(51)]


@pytest.mark.parametrize("k", range(2, 11))
def test_bound_table_cells(k):
    t = emit_table1(k, r1_max=3, z_max=3)
    assert t[0][:3] == [1, 2, 4]
    assert t[1][:3] == [k + 1, 2 * k + 1, 4 * k]
    assert t[2][:3] == [comb(k + 2, 2), (k + 1) ** 2, 2 * k * k + 2 * k + 1]
    assert t[3][:3] == [comb(k + 3, 3), comb(k + 3, 3) + comb(k + 2, 3),
                        comb(k + 3, 3) + 2 * comb(k + 2, 3) + comb(k + 1, 3)]
    for z in range(4):
        for r1 in range(4):
            assert t[z][r1] == sum(comb(r1, j) * comb(k + z - j, z) for j in range(min(r1, k + z) + 1))
    for r1 in range(k + 1):
        assert ac_bound(r1, 0, 0, k) == 2**r1


def test_hypercube_corner_needs_r1_at_most_k():
    # with more involutions than the diameter the ball is truncated
    assert ac_bound(4, 0, 0, 2) == 1 + 4 + 6 < 2**4


def test_bound_table_csv_header():
    lines = table1_csv(3, 2, 1).splitlines()
    assert lines[0] == "z,r1=0,r1=1,r1=2"
    assert lines[2] == "1,4,7,12"
    with pytest.raises(Unsupported):
        emit_table1(1, 2, 2)


def test_r1_rational_form():
    for z in range(6):
        for k in range(12):
            assert ac_bound_r1(z, k) == Fraction(ac_bound(1, 0, z, k))


def test_delannoy_matches_paths():
    for t in range(7):
        for k in range(7):
            assert delannoy(t, k) == delannoy_paths(t, k) == ac_bound(0, t, 0, k)


def test_delannoy_symmetric():
    for t in range(13):
        for k in range(13):
            assert delannoy(t, k) == delannoy(k, t)


@pytest.mark.parametrize("d", range(1, 11))
def test_mixed_moore_closed_form(d):
    for z in range(d + 1):
        r = d - z
        for k in range(21):
            exact = mixed_moore_recurrence(r, z, k)
            assert abs(mixed_moore_bound(r, z, k) - exact) / exact < 1e-9


def test_moore_special_cases():
    # undirected: 1 + d * sum (d-1)^i ; directed: sum d^i
    for d in range(2, 6):
        for k in range(6):
            assert mixed_moore_recurrence(d, 0, k) == 1 + d * sum((d - 1) ** i for i in range(k))
            assert mixed_moore_recurrence(0, d, k) == sum(d**i for i in range(k + 1))
    assert moore_tree_layers(1, 1, 4) == [1, 2, 3, 5, 8]


@pytest.mark.parametrize("r", range(1, 7))
def test_bipartite_closed_form(r):
    for z in range(5):
        for k in range(21):
            exact = bipartite_mixed_recurrence(r, z, k)
            if exact == 0:
                assert abs(bipartite_mixed_bound(r, z, k)) < 1e-9
            else:
                assert isclose(bipartite_mixed_bound(r, z, k), exact, rel_tol=1e-9)


def test_bipartite_parity_of_layers():
    # layers 0 and 2 for odd k = 3
    n = moore_tree_layers(2, 1, 3)
    assert bipartite_mixed_recurrence(2, 1, 3) == 2 * (n[0] + n[2]) == 16
    with pytest.raises(Unsupported):
        bipartite_mixed_bound(0, 2, 3)
