from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pconstant.cyclotomic import Cyclotomic, E, sqrt_cyclotomic
from pconstant.formats import parse_cyclo


@st.composite
def cyclotomics(draw):
    n = draw(st.sampled_from([1, 3, 4, 5, 7, 8, 9, 12, 15, 20]))
    terms = draw(st.dictionaries(st.integers(0, n - 1), st.integers(-3, 3), max_size=4))
    den = draw(st.sampled_from([1, 1, 2, 3]))
    return Cyclotomic.from_exponents(n, terms, den)


def close(a: Cyclotomic, z: complex) -> bool:
    return abs(complex(a) - z) < 1e-9


def test_roots_of_unity():
    for n in (1, 2, 3, 5, 6, 12):
        assert E(n) ** n == 1
        assert sum((E(n) ** k for k in range(n)), Cyclotomic(0)) == (1 if n == 1 else 0)
    assert E(4) * E(4) == -1
    assert (E(4) * E(4)).conductor == 1
    assert E(6) == -(E(3) ** 2)
    assert E(6).conductor == 3


def test_square_roots():
    for d in (-7, -3, -1, 2, 5, 6, 13, -15):
        r = sqrt_cyclotomic(d)
        assert r * r == d
        assert close(r, cmath.sqrt(d))


def test_golden_ratio_from_text():
    x = parse_cyclo("1/2+1/2*E(5)+1/2*E(5)^4-1/2*E(5)^2-1/2*E(5)^3")
    assert x == (Cyclotomic(Fraction(1, 2)) + sqrt_cyclotomic(5) * Fraction(1, 2))
    assert parse_cyclo("-E(5)^2-E(5)^3") == (Cyclotomic(1) + sqrt_cyclotomic(5)) / 2


def test_rational_helpers():
    x = Cyclotomic(Fraction(3, 4))
    assert x.is_rational() and not x.is_integer()
    assert x.to_fraction() == Fraction(3, 4)
    with pytest.raises(ValueError):
        E(3).to_fraction()
    with pytest.raises(ZeroDivisionError):
        Cyclotomic(1) / Cyclotomic(0)


@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(cyclotomics(), cyclotomics())
def test_agrees_with_complex_numbers(a, b):
    assert close(a * b, complex(a) * complex(b))
    assert close(a + b, complex(a) + complex(b))
    assert close(a.conjugate(), complex(a).conjugate())


@settings(max_examples=60)
@given(cyclotomics())
def test_inverse(a):
    if a != 0:
        assert a * a.inverse() == 1


@given(cyclotomics())
def test_text_round_trip(a):
    assert parse_cyclo(str(a)) == a
    assert hash(parse_cyclo(str(a))) == hash(a)


@given(cyclotomics())
def test_canonical_conductor_is_minimal(a):
    # rebuilding through a larger field gives the same canonical object
    b = a * E(4) * E(4) * -1
    assert b == a and b.conductor == a.conductor
