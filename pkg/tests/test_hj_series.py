from fractions import Fraction
from itertools import product
from math import gcd

import pytest

from skewinv.errors import ParameterError
from skewinv.hj_series import (
    decompose_triple,
    hj_expand,
    nc_series,
    typeA_data,
    typeD_data,
)


def test_hj_expand_kleinian():
    assert hj_expand(5, 4).entries == (2, 2, 2, 2)
    for n in range(2, 12):
        assert hj_expand(n, n - 1).entries == (2,) * (n - 1)


def test_hj_expand_7_over_5():
    assert hj_expand(7, 5).entries == (2, 2, 3)


def test_hj_expand_17_over_14():
    # the n = 17, k = 11 worked example (the displayed fraction 17/5 is a typo
    # for 17/14 = 17/((17+11)/2); the bracket list is what matters)
    assert hj_expand(17, 14).entries == (2, 2, 2, 2, 3, 2)


def test_hj_round_trip_all_small_fractions():
    for p in range(1, 61):
        for q in range(1, p + 1):
            if gcd(p, q) != 1:
                continue
            exp = hj_expand(p, q)
            assert exp.value() == Fraction(p, q)
            assert exp.entries[0] >= 1
            assert all(a >= 2 for a in exp.entries[1:])


def test_hj_expand_rejects_nonpositive():
    with pytest.raises(ParameterError):
        hj_expand(0, 3)
    with pytest.raises(ParameterError):
        hj_expand(3, 0)


def test_typeA_kleinian():
    for n in range(2, 9):
        data = typeA_data(n, n - 1)
        assert data.beta == (n,)
        assert data.i_series == (n, 1, 0)
        assert data.j_series == (0, 1, n)
        assert data.d == 3


def test_typeA_veronese_4_1():
    data = typeA_data(4, 1)
    assert data.i_series == (4, 3, 2, 1, 0)
    assert data.j_series == (0, 1, 2, 3, 4)
    assert data.d == 5


def test_typeA_recurrence_identities():
    # i_(k-1) + i_(k+1) = beta_(k-1) i_k (same for j), for several (n, a)
    for n in range(2, 14):
        for a in range(1, n):
            if gcd(a, n) != 1:
                continue
            data = typeA_data(n, a)
            i, j, beta = data.i_series, data.j_series, data.beta
            for k in range(1, data.d - 1):
                assert i[k - 1] + i[k + 1] == beta[k - 1] * i[k]
                assert j[k - 1] + j[k + 1] == beta[k - 1] * j[k]


def test_typeA_rejects_bad_input():
    with pytest.raises(ParameterError):
        typeA_data(4, 2)
    with pytest.raises(ParameterError):
        typeA_data(3, 3)


def test_typeD_3_2():
    data = typeD_data(3, 2)
    assert data.beta == (3,)
    assert data.s_series == (1, 1)
    assert data.t_series == (3, 2)
    assert data.r_series == (1, 0)
    assert data.d == 3


def test_typeD_definitional_r():
    for m in range(3, 14):
        for q in range(2, m):
            if gcd(m, q) != 1:
                continue
            data = typeD_data(m, q)
            for s, t, r in zip(data.s_series, data.t_series, data.r_series):
                assert r == (m - q) * t - q * s


def test_typeD_kleinian_alpha_expansion():
    # q = m-1 makes the m/q expansion all 2s (the dual-graph alpha series)
    for m in range(3, 10):
        assert hj_expand(m, m - 1).entries == (2,) * (m - 1)


def test_nc_series_17_11():
    ns = nc_series(17, 11)
    assert ns.branch == "n_gt_k"
    assert ns.beta == (2, 2, 3, 2, 3, 2)
    assert ns.r_series == (19, 8, 5, 2, 1, 0)
    assert ns.s_series == (1, 1, 2, 3, 7, 11)
    assert ns.t_series == (5, 3, 4, 5, 11, 17)
    assert ns.d == 7


def test_nc_series_k1():
    for n in (3, 5, 7, 9, 11):
        ns = nc_series(n, 1)
        assert ns.beta == (2, (n + 1) // 2)
        assert ns.r_series == (1, 0)
        assert ns.s_series == (1, 1)
        assert ns.t_series == (n + 2, n)


def test_nc_series_7_3():
    ns = nc_series(7, 3)
    assert ns.r_series == (4, 1, 0)
    assert ns.s_series == (1, 1, 3)
    assert ns.t_series == (5, 3, 7)
    assert ns.generator_degrees() == [15, 9, 21, 12]


def test_nc_series_rejects_bad_input():
    with pytest.raises(ParameterError):
        nc_series(4, 3)
    with pytest.raises(ParameterError):
        nc_series(3, 9)
    with pytest.raises(ParameterError):
        nc_series(5, 5)
    with pytest.raises(ParameterError):
        nc_series(1, 1)


def _odd_coprime_pairs(bound, gt):
    for n in range(1, bound + 1, 2):
        for k in range(1, bound + 1, 2):
            if gcd(n, k) == 1 and ((n > k) if gt else (n < k)) and (n, k) != (1, 1):
                yield n, k


def test_lemma_battery_n_gt_k():
    for n, k in _odd_coprime_pairs(25, gt=True):
        ns = nc_series(n, k)
        r, s, t = ns.r_series, ns.s_series, ns.t_series
        assert r[-2] == 1 and r[-1] == 0
        assert s[-1] == k and t[-1] == n
        assert all(r[i] > r[i + 1] for i in range(len(r) - 1))
        for i in range(len(r) - 1):
            assert r[i] * s[i + 1] - r[i + 1] * s[i] == k
            assert r[i] * t[i + 1] - r[i + 1] * t[i] == n


def test_lemma_battery_n_lt_k():
    # analogue battery: the last two r-values are 1 then 0, terminals s_d = k,
    # t_d = n, r strictly decreasing
    for n, k in _odd_coprime_pairs(25, gt=False):
        ns = nc_series(n, k)
        r, s, t = ns.r_series, ns.s_series, ns.t_series
        assert ns.branch == "n_lt_k"
        assert len(r) == ns.d
        assert r[0] == (3 * k - n) // 2 and r[1] == (k - n) // 2
        assert r[-2] == 1 and r[-1] == 0
        assert s[-1] == k and t[-1] == n
        assert all(r[i] > r[i + 1] for i in range(len(r) - 1))


def test_decompose_triple_units():
    ns = nc_series(7, 3)
    for i, (r, s, t) in enumerate(zip(ns.r_series, ns.s_series, ns.t_series)):
        c = decompose_triple(ns, r, s, t)
        expected = [0] * len(ns.r_series)
        expected[i] = 1
        assert c == expected


def test_decompose_triple_r_zero():
    ns = nc_series(7, 3)
    for m in range(1, 4):
        c = decompose_triple(ns, 0, m * 3, m * 7)
        assert c == [0, 0, m]


def test_decompose_triple_example():
    ns = nc_series(7, 3)
    assert decompose_triple(ns, 5, 2, 8) == [1, 1, 0]


def _brute_decompositions(ns, r, s, t, bound=9):
    rs, ss, ts = ns.r_series, ns.s_series, ns.t_series
    found = []
    ranges = [range(bound + 1)] * len(rs)
    for c in product(*ranges):
        if (
            sum(x * y for x, y in zip(c, rs)) == r
            and sum(x * y for x, y in zip(c, ss)) == s
            and sum(x * y for x, y in zip(c, ts)) == t
        ):
            found.append(list(c))
    return found


def test_decompose_triple_against_exhaustive_search():
    for n, k in ((7, 3), (5, 3), (9, 5)):
        ns = nc_series(n, k)
        for s in range(1, 9):
            for t in range(1, 2 * max(n, k)):
                num = k * t - n * s
                if num < 0 or num % 2:
                    continue
                r = num // 2
                if not (0 <= r < 2 * k):
                    continue
                got = decompose_triple(ns, r, s, t)
                all_c = _brute_decompositions(ns, r, s, t)
                assert got in all_c
                # the greedy answer has minimal total weight among all decompositions
                assert sum(got) == min(sum(c) for c in all_c)


def test_decompose_triple_rejects_violated_precondition():
    ns = nc_series(7, 3)
    with pytest.raises(ParameterError):
        decompose_triple(ns, 1, 1, 1)  # 2r + ns != kt
    with pytest.raises(ParameterError):
        decompose_triple(ns, 7, 1, 7)  # r >= 2k
