import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smoothchar import (
    ParameterError,
    RangeError,
    build_group,
    char_sum,
    char_sum_profile,
    enumerate_characters,
    frak_s,
    large_sieve_ratio,
    large_sieve_terms,
    moebius,
    ones,
    random_unit,
    sieve_smooth,
    t_sum,
    t_sums_batch,
)
from smoothchar.reports import write_profile_csv


def _chi(q, idx):
    return enumerate_characters(build_group(q))[idx]


def test_char_sum_example_mod3(smooth_10_y3):
    # members {1,2,3,4,6,8,9} with chi values 1,-1,0,1,0,-1,0
    assert char_sum(_chi(3, 1), ones(), 10, smooth_10_y3) == 0j


def test_char_sum_trivial_q1(smooth_1e4_y10):
    chi = _chi(1, 0)
    for t in (1, 57, 9999):
        assert char_sum(chi, ones(), t, smooth_1e4_y10) == smooth_1e4_y10.count_upto(t)


def test_char_sum_principal_counts_coprime(smooth_1e4_y10):
    chi = _chi(6, 0)
    s = char_sum(chi, ones(), 500, smooth_1e4_y10)
    expected = sum(1 for n in smooth_1e4_y10.members[smooth_1e4_y10.members <= 500] if np.gcd(int(n), 6) == 1)
    assert s == expected


def test_profile_examples(smooth_10_y3):
    p = char_sum_profile(_chi(3, 1), ones(), [5, 10], smooth_10_y3)
    assert list(p.sums) == [1 + 0j, 0j]
    assert list(p.psis) == [4, 7]
    p.validate()


def test_profile_running_count(smooth_10_y3):
    p = char_sum_profile(_chi(1, 0), ones(), list(smooth_10_y3.members), smooth_10_y3)
    assert list(p.sums) == [i + 1 for i in range(7)]


def test_profile_matches_char_sum_bitwise(smooth_1e4_y100):
    chi = _chi(7, 3)
    w = random_unit(11)
    cps = [10, 100, 640, 5000, 10_000]
    p = char_sum_profile(chi, w, cps, smooth_1e4_y100)
    for t, s in zip(cps, p.sums):
        assert char_sum(chi, w, t, smooth_1e4_y100) == complex(s)


def test_profile_validation(smooth_10_y3):
    with pytest.raises(RangeError):
        char_sum(_chi(3, 1), ones(), 11, smooth_10_y3)
    with pytest.raises(ParameterError):
        char_sum_profile(_chi(3, 1), ones(), [5, 5], smooth_10_y3)
    with pytest.raises(ParameterError):
        char_sum_profile(_chi(3, 1), ones(), [], smooth_10_y3)


@given(q=st.integers(min_value=1, max_value=30), t=st.integers(min_value=1, max_value=10_000), seed=st.integers(0, 5))
@settings(max_examples=40, deadline=None)
def test_triangle_bound(q, t, seed, smooth_1e4_y10):
    for w in (ones(), moebius(), random_unit(seed)):
        for chi in enumerate_characters(build_group(q)):
            s = char_sum(chi, w, t, smooth_1e4_y10)
            assert abs(s) <= smooth_1e4_y10.count_upto(t) * (1 + 1e-12) + 1e-12


def test_t_sum_j0_is_prefix_difference(smooth_1e4_y10):
    chi = _chi(5, 2)
    w = moebius()
    for m in (10, 333, 5000):
        expect = char_sum(chi, w, 2 * m, smooth_1e4_y10) - char_sum(chi, w, m, smooth_1e4_y10)
        assert t_sum(chi, w, 0, m, smooth_1e4_y10) == pytest.approx(expect, abs=1e-12)


def test_t_sum_example_mod3(smooth_10_y3):
    # members of (5, 10] are {6, 8, 9} with chi values 0, -1, 0
    assert t_sum(_chi(3, 1), ones(), 0, 5, smooth_10_y3) == -1 + 0j


def test_t_sum_q1_matches_direct_exponential(smooth_1e4_y10):
    chi = _chi(1, 0)
    m, j = 100, 7
    ns = [int(n) for n in smooth_1e4_y10.members if m < n <= 2 * m]
    direct = sum(np.exp(2j * np.pi * j * (n - m) / m) for n in ns)
    assert t_sum(chi, ones(), j, m, smooth_1e4_y10) == pytest.approx(direct, abs=1e-9)


def test_t_sum_range_and_param_errors(smooth_10_y3):
    with pytest.raises(RangeError):
        t_sum(_chi(3, 1), ones(), 0, 6, smooth_10_y3)
    with pytest.raises(ParameterError):
        t_sum(_chi(3, 1), ones(), -1, 5, smooth_10_y3)


def test_t_sums_batch_matches_singles(smooth_1e4_y100):
    chi = _chi(9, 4)
    w = random_unit(3)
    m, J = 70, 25
    batch = t_sums_batch(chi, w, m, J, smooth_1e4_y100)
    for j in range(J + 1):
        assert batch[j] == t_sum(chi, w, j, m, smooth_1e4_y100)


def test_frak_s_examples(smooth_10_y3, smooth_1e4_y10):
    assert frak_s(_chi(3, 1), ones(), 5, 0, smooth_10_y3) == 1.0
    chi = _chi(5, 1)
    t0 = abs(t_sum(chi, ones(), 0, 100, smooth_1e4_y10))
    assert frak_s(chi, ones(), 100, 0, smooth_1e4_y10) == t0
    assert frak_s(chi, moebius(), 512, 40, smooth_1e4_y10) >= 0.0


def test_frak_s_cauchy_aggregation(smooth_1e4_y10):
    # frak^2 <= (sum w_j)(sum w_j |T_j|^2) with w_0 = 1, w_j = 1/j
    for q in (1, 3, 5, 8):
        for chi in enumerate_characters(build_group(q)):
            for m in (50, 700, 4800):
                J = 30
                ts = t_sums_batch(chi, ones(), m, J, smooth_1e4_y10)
                w = np.ones(J + 1)
                w[1:] = 1.0 / np.arange(1, J + 1)
                lhs = frak_s(chi, ones(), m, J, smooth_1e4_y10) ** 2
                rhs = w.sum() * float(np.sum(w * np.abs(ts) ** 2))
                assert lhs <= rhs * (1 + 1e-9)


def test_large_sieve_q1_exact(smooth_1e4_y10):
    assert large_sieve_ratio(1, smooth_1e4_y10, ones()) == 1.0


def test_large_sieve_ones_at_least_one(smooth_1e4_y100):
    for Q in (2, 5, 10):
        assert large_sieve_ratio(Q, smooth_1e4_y100, ones()) >= 1.0


def test_large_sieve_zero_weights(tmp_path, smooth_10_y3):
    p = tmp_path / "zero.csv"
    p.write_text("n,re,im\n")
    from smoothchar import from_file

    assert large_sieve_ratio(3, smooth_10_y3, from_file(p)) == 0.0


def test_large_sieve_terms_finite_random(smooth_1e4_y100):
    lhs, rhs = large_sieve_terms(10, smooth_1e4_y100, random_unit(7))
    assert np.isfinite(lhs) and np.isfinite(rhs) and rhs > 0


def test_large_sieve_threads_identical(smooth_1e4_y100):
    a = large_sieve_terms(12, smooth_1e4_y100, random_unit(5), threads=1)
    b = large_sieve_terms(12, smooth_1e4_y100, random_unit(5), threads=4)
    assert a == b


def test_large_sieve_validation(smooth_10_y3):
    with pytest.raises(ParameterError):
        large_sieve_ratio(0, smooth_10_y3, ones())


def test_profile_csv_roundtrip(tmp_path, smooth_10_y3):
    p = char_sum_profile(_chi(3, 1), ones(), [5, 10], smooth_10_y3)
    out = tmp_path / "profile.csv"
    write_profile_csv(p, out)
    lines = out.read_text().splitlines()
    assert lines[0] == "q,chi_index,t,re_S,im_S,psi_t"
    q, idx, t, re, im, psi_t = lines[1].split(",")
    assert (int(q), int(idx), int(t), float(re), float(im), int(psi_t)) == (3, 1, 5, 1.0, 0.0, 4)
