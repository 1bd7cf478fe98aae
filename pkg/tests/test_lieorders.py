from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import factorint

from pconstant.lieorders import (
    InvalidParameter,
    LieFamily,
    divides_pm,
    expected,
    families,
    group_order,
    prime_powers,
    scan_families,
    twisted_parameters,
    zsigmondy,
)


def fam(text):
    return LieFamily.parse(text)


def test_order_examples():
    assert group_order(fam("2B2"), 8).order == 29120 == 64 * 7 * 65
    assert group_order(fam("B2"), 3).order == 51840 == 81 * 80 * 8
    assert group_order(fam("A1"), 5).order == 120
    q = 3
    assert group_order(fam("2G2"), 27).order == 27**3 * (27 - 1) * (27**3 + 1)
    assert group_order(fam("3D4"), 2).order == 2**12 * (2**6 - 1) * (2**12 - 1) // (2**2 + 1)
    assert group_order(fam("2A3"), q).order == q**6 * (q**4 - 1) * (q**2 - 1) * (q**3 + 1)
    assert group_order(fam("C2"), 3).order == group_order(fam("B2"), 3).order


def test_invalid_parameters():
    for text, q in (("2B2", 4), ("2G2", 9), ("A1", 6), ("2F4", 2 ** 2)):
        with pytest.raises(InvalidParameter):
            group_order(fam(text), q)
    for text in ("B1", "D2", "X5", "E9"):
        with pytest.raises(InvalidParameter):
            fam(text)


def test_zsigmondy_examples():
    assert zsigmondy(2, 6) is None
    assert zsigmondy(2, 4) == 5
    assert zsigmondy(2, 3) == 7
    with pytest.raises(ValueError):
        zsigmondy(2, 2)


@settings(max_examples=150)
@given(st.integers(2, 30), st.integers(3, 16))
def test_zsigmondy_properties(a, n):
    z = zsigmondy(a, n)
    if z is None:
        assert (a, n) == (2, 6)
        return
    assert (a**n - 1) % z == 0
    assert all((a**i - 1) % z for i in range(1, n))
    for k in range(1, 3 * n + 1):
        if (a**k - 1) % z == 0:
            assert k % n == 0
    # least such prime (checked where brute force is cheap)
    if z < 10**4:
        assert all(
            not ((a**n - 1) % r == 0 and all((a**i - 1) % r for i in range(1, n)))
            for r in range(2, z)
            if all(r % s for s in range(2, int(math.isqrt(r)) + 1))
        )


def test_divides_examples():
    assert divides_pm(fam("A2"), 4, -1).divides
    assert not divides_pm(fam("2A3"), 3, -1).divides
    assert divides_pm(fam("2B2"), 8, 1).divides
    assert divides_pm(fam("A3"), 2, -1).divides
    assert divides_pm(fam("G2"), 2, -1).divides


def _instances(q_max, rank_max):
    for f in families(rank_max):
        qs = twisted_parameters(f, q_max) if f.twisted_parameter else prime_powers(q_max)
        for q in qs:
            yield f, q


@pytest.mark.parametrize("f, q", list(_instances(9, 4)), ids=lambda x: str(x))
def test_p_part_is_exact(f, q):
    data = group_order(f, q)
    assert data.order % data.p_part == 0
    assert (data.order // data.p_part) % data.p != 0
    assert data.p_part == q**data.m
    assert factorint(data.p_part) == {data.p: factorint(data.p_part)[data.p]}


def test_witnesses_certify_nondivisibility():
    for f, q in _instances(16, 5):
        for sign in (1, -1):
            r = divides_pm(f, q, sign)
            x = r.data.p_part + sign
            assert r.divides == (r.data.order % x == 0)
            if r.divides:
                assert r.witness is None
                continue
            w = r.witness
            assert x % w.factor == 0 and w.factor > 1
            # the witness part cannot be absorbed by |G|
            assert r.data.order % w.factor != 0
            if math.gcd(w.factor, r.data.order) > 1:
                # excess valuation: a prime power sharing a prime with |G|
                assert w.prime is not None and set(factorint(w.factor)) == {w.prime}
            if w.prime is not None:
                assert w.factor % w.prime == 0


def test_scan_matches_lists():
    report = scan_families(16, 8)
    assert report.mismatches == []
    minus = set(report.positives(-1))
    assert {"A1(2)", "A2(4)", "A3(2)", "B2(3)", "G2(2)"} <= minus
    plus = set(report.positives(1))
    for label in ("2B2(8)", "2B2(32)", "2B2(128)", "2G2(27)", "2G2(243)", "2A2(3)"):
        assert label in plus
    g2 = next(e for e in report.entries if e.family == "G2" and e.q == 2)
    assert g2.notes


def test_expected_aliases():
    assert expected(fam("C2"), 5, -1) and expected(fam("D3"), 2, -1)
    assert expected(fam("2D2"), 3, 1)
    assert not expected(fam("2A3"), 3, -1)
