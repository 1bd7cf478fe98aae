from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import alternating_elements, brute_classes, compose, cycle_type
from pconstant.altchar import (
    QuadraticValue,
    alt_character_table,
    alt_classes,
    p_constant_alt,
    split_values,
    standard_representative,
)
from pconstant.cyclotomic import Cyclotomic, sqrt_cyclotomic
from pconstant.symchar import mn_value


def _brute(n):
    """Class of each Alt_n element, keyed like the table: (cycle type, tag)."""
    classes = brute_classes(alternating_elements(n))
    which = {}
    for cls in classes:
        ct = cycle_type(next(iter(cls)))
        same_type = [c for c in classes if cycle_type(next(iter(c))) == ct]
        if len(same_type) == 1:
            tag = "single"
        else:
            tag = "+" if standard_representative(ct) in cls else "-"
        for x in cls:
            which[x] = (ct, tag)
    return classes, which


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_classes_match_enumeration(n):
    classes, which = _brute(n)
    sizes = {}
    for x, key in which.items():
        sizes[key] = sizes.get(key, 0) + 1
    T = alt_character_table(n)
    got = {(c.representative.mu, c.representative.tag): c.size for c in T.classes}
    assert got == sizes


def test_split_examples():
    names = {c.name for c in alt_classes(5) if c.split}
    assert names == {"[5]+", "[5]-"}
    assert [c.mu for c in alt_classes(7) if c.split and c.tag == "+"] == [(7,)]
    assert {c.name for c in alt_classes(4)} == {"[1,1,1,1]", "[2,2]", "[3,1]+", "[3,1]-"}


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_power_maps_match_enumeration(n):
    _, which = _brute(n)
    T = alt_character_table(n)
    keys = [(c.representative.mu, c.representative.tag) for c in T.classes]
    for t, images in T.power_maps.items():
        for j, c in enumerate(T.classes):
            mu, tag = keys[j]
            x = standard_representative(mu)
            if tag == "-":
                # conjugate by the transposition (0 1): odd, so it swaps the pair
                tau = (1, 0) + tuple(range(2, n))
                x = compose(compose(tau, x), tau)
            y = tuple(range(n))
            for _ in range(t):
                y = compose(y, x)
            assert keys[images[j]] == which[y], (n, t, keys[j])


def test_alt5_split_values():
    T = alt_character_table(5)
    names = [c.name for c in T.classes]
    i = T.row_labels.index("[3,1,1]+")
    half = Fraction(1, 2)
    assert T.rows[i][names.index("[5]+")] == Cyclotomic(half) + sqrt_cyclotomic(5) * half
    assert T.rows[i][names.index("[5]-")] == Cyclotomic(half) - sqrt_cyclotomic(5) * half
    assert sorted(T.degrees) == [1, 3, 3, 4, 5]


def test_alt4_restriction_row():
    T = alt_character_table(4)
    i = T.row_labels.index("[3,1]")
    assert T.degrees[i] == 3


@pytest.mark.parametrize("n", range(3, 13))
def test_tables_valid(n):
    T = alt_character_table(n)
    T.check()
    assert sum(d * d for d in T.degrees) == math.factorial(n) // 2


@pytest.mark.parametrize("n", range(4, 13))
def test_split_pair_symmetry_and_restriction(n):
    T = alt_character_table(n)
    classes = [c.representative for c in T.classes]
    partner = {}
    for j, c in enumerate(classes):
        if c.split:
            partner[j] = next(k for k, d in enumerate(classes) if d.mu == c.mu and d.tag != c.tag)
    labels = T.row_labels
    for i, lab in enumerate(labels):
        if not lab.endswith("+"):
            continue
        k = labels.index(lab[:-1] + "-")
        lam = tuple(int(x) for x in lab[1:-2].split(","))
        for j, c in enumerate(classes):
            if j in partner:
                assert T.rows[i][j] == T.rows[k][partner[j]]
            assert T.rows[i][j] + T.rows[k][j] == mn_value(lam, c.mu)


def test_split_values_formula():
    plus, minus = split_values((3, 1, 1))
    assert str(plus) == "1/2+1/2*SQRT(5)" and str(minus) == "1/2-1/2*SQRT(5)"
    # n = 7, lambda = (4,1,1,1): hooks (7), eps = (-1)^3
    plus, _ = split_values((4, 1, 1, 1))
    assert plus == QuadraticValue(Fraction(-1, 2), Fraction(1, 2), -7)


def test_quadratic_value_text():
    assert str(QuadraticValue(Fraction(1, 2), Fraction(-1, 2), 5)) == "1/2-1/2*SQRT(5)"
    assert str(QuadraticValue(0, 1, 20)) == "2*SQRT(5)"
    assert str(QuadraticValue(3, 0, 7)) == "3"
    assert QuadraticValue(2, 3, 4) == QuadraticValue(8)
    with pytest.raises(ValueError):
        QuadraticValue(1, 1, 0)


@given(
    st.fractions(max_denominator=6),
    st.fractions(max_denominator=6).filter(lambda b: b != 0),
    st.integers(-30, 30).filter(lambda d: d not in (0, 1)),
)
def test_quadratic_round_trips(a, b, d):
    q = QuadraticValue(a, b, d)
    assert QuadraticValue.parse(str(q)) == q
    assert QuadraticValue.from_cyclotomic(q.to_cyclotomic()) == q


def test_classifier_examples():
    hits = [e for e in p_constant_alt(10, 5) if e.degree > 1 and e.defect > 0]
    assert sorted(e.label for e in hits) == ["[5,2,1,1,1]+", "[5,2,1,1,1]-", "[6,1,1,1,1]"]
    assert all(e.constant in (1, -1) for e in hits)
    for n, degs in ((5, [3, 3, 5]), (6, [9]), (7, [15])):
        got = sorted(e.degree for e in p_constant_alt(n, 2) if e.degree > 1 and e.defect > 0)
        assert got == degs
    labels = {e.label for e in p_constant_alt(5, 5)}
    assert "[3,1,1]+" not in labels and "[3,1,1]-" not in labels
    with pytest.raises(ValueError):
        p_constant_alt(4, 3)
