import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smoothchar import (
    ParameterError,
    RangeError,
    build_group,
    conductor,
    enumerate_characters,
    primitive_characters,
)
from smoothchar.dirichlet import MAX_Q, euler_phi, factorize
from smoothchar.reports import write_character_table_json

from helpers import primitive_count_oracle


def test_group_q5():
    g = build_group(5)
    assert g.order == 4
    assert g.generators == (2,)
    assert g.factors[0].order == 4
    # direct powering: 2 really generates
    assert sorted(pow(2, k, 5) for k in range(4)) == [1, 2, 3, 4]


def test_group_q1_trivial():
    g = build_group(1)
    assert g.order == 1
    assert g.factors == ()
    chars = enumerate_characters(g)
    assert len(chars) == 1
    chi = chars[0]
    assert chi.conductor == 1 and chi.is_primitive
    assert chi.eval(0) == 1 and chi.eval(7) == 1


def test_group_q8_structure():
    g = build_group(8)
    assert [f.order for f in g.factors] == [2, 2]
    assert g.generators == (7, 5)  # 7 = -1 mod 8
    # direct enumeration: units mod 8 are {1,3,5,7} = (-1)^s 5^k
    units = {(pow(-1, s, 8) * pow(5, k, 8)) % 8 for s in range(2) for k in range(2)}
    assert units == {1, 3, 5, 7}


def test_dlog_tables_defined_exactly_at_units():
    for q in [3, 4, 5, 8, 9, 16, 45, 360]:
        g = build_group(q)
        for f in g.factors:
            for u in range(f.modulus):
                if math.gcd(u, f.modulus) == 1:
                    assert f.dlog[u] >= 0
                else:
                    assert f.dlog[u] == -1


def test_generator_powers_reconstruct_units():
    # g^{index(u)} == u per factor (jointly for the 2-part)
    for q in [5, 7, 9, 25, 8, 16, 32]:
        g = build_group(q)
        p, e = g.factorization[0]
        pe = p**e
        if p == 2 and e >= 3:
            sign, five = g.factors
            for u in range(1, pe, 2):
                s, k = int(sign.dlog[u]), int(five.dlog[u])
                assert (pow(-1, s, pe) * pow(5, k, pe)) % pe == u
        else:
            f = g.factors[0]
            for u in range(1, pe):
                if math.gcd(u, pe) == 1:
                    assert pow(f.generator, int(f.dlog[u]), pe) == u


def test_enumeration_count_and_order():
    for q in [1, 2, 3, 4, 5, 8, 12, 15, 24, 100]:
        g = build_group(q)
        chars = enumerate_characters(g)
        assert len(chars) == g.order == euler_phi(q)
        # principal first, exponent vectors lexicographic and distinct
        assert chars[0].exponents == tuple([0] * len(g.factors))
        vecs = [c.exponents for c in chars]
        assert vecs == sorted(vecs)
        assert len(set(vecs)) == len(vecs)


def test_primitive_counts_examples():
    assert sum(c.is_primitive for c in enumerate_characters(build_group(5))) == 3
    assert sum(c.is_primitive for c in enumerate_characters(build_group(8))) == 2


@pytest.mark.parametrize("q", list(range(1, 121)))
def test_primitive_count_oracle(q):
    assert len(primitive_characters(build_group(q))) == primitive_count_oracle(q)


def test_eval_examples():
    chi = enumerate_characters(build_group(3))[1]
    assert chi.eval(2) == pytest.approx(-1)
    assert chi.eval(3) == 0 and chi.eval(6) == 0
    principal = enumerate_characters(build_group(12))[0]
    for n in (1, 5, 7, 11, 13):
        assert principal.eval(n) == 1
    for n in (0, 2, 3, 4, 6, 8):
        assert principal.eval(n) == 0


def test_eval_negative_rejected():
    chi = enumerate_characters(build_group(3))[1]
    with pytest.raises(ParameterError):
        chi.eval(-1)


def test_value_table_matches_eval():
    for q in [1, 2, 7, 8, 12, 36, 101]:
        for chi in enumerate_characters(build_group(q)):
            table = chi.value_table
            for n in range(q):
                assert table[n] == chi.eval(n)


def test_orthogonality_small():
    for q in range(1, 60):
        for chi in enumerate_characters(build_group(q)):
            total = sum(chi.eval(n) for n in range(1, q + 1))
            if chi.index == 0:
                assert total == pytest.approx(euler_phi(q))
            else:
                assert abs(total) < 1e-9


def test_dual_orthogonality_small():
    for q in range(1, 40):
        chars = enumerate_characters(build_group(q))
        for n in range(1, q + 1):
            if math.gcd(n, q) != 1:
                continue
            total = sum(chi.eval(n) for chi in chars)
            if n % q == 1 % q:
                assert total == pytest.approx(euler_phi(q))
            else:
                assert abs(total) < 1e-9


@given(
    q=st.integers(min_value=1, max_value=60),
    m=st.integers(min_value=0, max_value=1000),
    n=st.integers(min_value=0, max_value=1000),
)
@settings(max_examples=60, deadline=None)
def test_multiplicativity(q, m, n):
    for chi in enumerate_characters(build_group(q)):
        lhs = chi.eval(m * n)
        rhs = chi.eval(m) * chi.eval(n)
        assert abs(lhs - rhs) < 1e-12


def test_conductor_examples():
    assert enumerate_characters(build_group(9))[0].conductor == 1  # principal
    assert enumerate_characters(build_group(4))[1].conductor == 4
    g15 = build_group(15)
    induced = [c for c in enumerate_characters(g15) if c.conductor == 3]
    assert len(induced) == 1
    # it agrees with the mod-3 character on units of 15
    chi3 = enumerate_characters(build_group(3))[1]
    for n in range(1, 16):
        if math.gcd(n, 15) == 1:
            assert induced[0].eval(n) == pytest.approx(chi3.eval(n))


def test_conductor_divides_q_and_primitivity():
    for q in [2, 6, 12, 16, 45, 90]:
        for chi in enumerate_characters(build_group(q)):
            assert q % chi.conductor == 0
            assert chi.is_primitive == (chi.conductor == q)
            assert conductor(chi) == chi.conductor


def test_character_order_is_minimal():
    for q in [5, 8, 9, 21]:
        for chi in enumerate_characters(build_group(q)):
            vals = {n: chi.eval(n) for n in range(q) if math.gcd(n, q) == 1}
            # chi^order is principal
            for n, v in vals.items():
                assert v**chi.order == pytest.approx(1)
            # no smaller power works for all units
            for k in range(1, chi.order):
                if all(abs(v**k - 1) < 1e-9 for v in vals.values()):
                    pytest.fail(f"order {chi.order} not minimal for q={q}, chi={chi.exponents}")


def test_q_range_error():
    with pytest.raises(RangeError):
        build_group(0)
    with pytest.raises(RangeError):
        build_group(MAX_Q + 1)


def test_factorize():
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert factorize(1) == []
    assert factorize(97) == [(97, 1)]


def test_json_export(tmp_path):
    chars = enumerate_characters(build_group(8))
    out = tmp_path / "chars.json"
    write_character_table_json(chars, out)
    data = json.loads(out.read_text())
    assert len(data) == 4
    assert set(data[0]) == {"q", "exponents", "order", "conductor", "is_primitive"}
    assert data[0]["conductor"] == 1 and data[0]["is_primitive"] is False
    assert sum(d["is_primitive"] for d in data) == 2
