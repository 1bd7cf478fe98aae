"""Exact arithmetic in cyclotomic fields.

An element of Q(E(N)) is stored as integer numerators over a common
positive denominator, in the power basis 1, z, ..., z^(phi(N)-1) of a
primitive N-th root z reduced modulo the N-th cyclotomic polynomial.
After every operation the conductor N is lowered to the smallest field
containing the value, so equal values always have equal representations.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from sympy import factorint

Number = Union[int, Fraction, "Cyclotomic"]


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorint(n))) if n > 1 else ()


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    return out


def _reduce(coeffs: list[int], n: int) -> list[int]:
    """Reduce a polynomial in z modulo Phi_n; returns phi(n) coefficients."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    coeffs[base + j] -= c * phi[j]
            coeffs[i] = 0
    if len(coeffs) < deg:
        coeffs.extend([0] * (deg - len(coeffs)))
    return coeffs[:deg]


def _from_exponents(n: int, terms: dict[int, int]) -> list[int]:
    dense = [0] * n
    for e, c in terms.items():
        dense[e % n] += c
    return _reduce(dense, n)


def _embed(num: tuple[int, ...], n: int, m: int) -> list[int]:
    """Coefficients of a Q(E(n)) element inside Q(E(m)), n | m."""
    if n == m:
        return list(num)
    step = m // n
    dense = [0] * m
    for i, c in enumerate(num):
        if c:
            dense[i * step] += c
    return _reduce(dense, m)


def _descend(n: int, num: list[int]) -> tuple[int, list[int]]:
    """Lower the conductor while the element lies in a proper subfield."""
    while n > 1:
        for p in prime_factors(n):
            m = n // p
            if m % p == 0:
                # Phi_n(x) = Phi_m(x^p): subfield iff only exponents = 0 mod p occur
                if all(c == 0 for i, c in enumerate(num) if i % p):
                    num = num[::p]
                    n = m
                    break
            else:
                cand = _coprime_candidate(n, p, m, num)
                if _embed(tuple(cand), m, n) == num:
                    num = cand
                    n = m
                    break
        else:
            break
    if n == 1:
        num = num[:1]
    return n, num


def _coprime_candidate(n: int, p: int, m: int, num: list[int]) -> list[int]:
    # write z_n^i = z_m^a z_p^b with i = p*a + m*b (mod n); an element of
    # Q(z_m) equals y_0 - y_1 where y_b collects the z_p^b terms
    inv_m = pow(m, -1, p) if p > 1 else 0
    inv_p = pow(p, -1, m) if m > 1 else 0
    terms: dict[int, int] = {}
    for i, c in enumerate(num):
        if not c:
            continue
        b = (i * inv_m) % p
        if b > 1:
            continue
        a = (i * inv_p) % m if m > 1 else 0
        terms[a] = terms.get(a, 0) + (c if b == 0 else -c)
    return _from_exponents(m, terms) if m > 1 else [terms.get(0, 0)]


class Cyclotomic:
    """Element of a cyclotomic field in canonical (minimal conductor) form."""

    __slots__ = ("_n", "_num", "_den", "_hash")

    def __init__(self, value: Number = 0):
        if isinstance(value, Cyclotomic):
            self._n, self._num, self._den = value._n, value._num, value._den
        else:
            q = Fraction(value)
            self._n, self._num, self._den = 1, (q.numerator,), q.denominator
        self._hash = None

    @classmethod
    def _make(cls, n: int, num: Iterable[int], den: int = 1, minimize: bool = True) -> "Cyclotomic":
        num = list(num)
        if den < 0:
            num = [-c for c in num]
            den = -den
        if minimize:
            n, num = _descend(n, num)
        g = den
        for c in num:
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        obj = cls.__new__(cls)
        obj._n, obj._num, obj._den, obj._hash = n, tuple(num), den, None
        return obj

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> "Cyclotomic":
        """E(n)^k."""
        if n < 1:
            raise ValueError("E(n) needs n >= 1")
        return cls._make(n, _from_exponents(n, {k % n: 1}))

    @classmethod
    def from_exponents(cls, n: int, terms: dict[int, int], den: int = 1) -> "Cyclotomic":
        """Sum of c*E(n)^e over ``terms`` (exponent -> integer coefficient)."""
        return cls._make(n, _from_exponents(n, terms), den)

    @classmethod
    def from_coefficients(cls, n: int, coeffs: Iterable[Fraction | int]) -> "Cyclotomic":
        coeffs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        num = [int(c * den) for c in coeffs]
        dense = num + [0] * max(0, totient(n) - len(num))
        return cls._make(n, _reduce(dense, n), den)

    # -- accessors ---------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_rational(self) -> bool:
        return self._n == 1

    def is_integer(self) -> bool:
        return self._n == 1 and self._den == 1

    def is_zero(self) -> bool:
        return self._n == 1 and self._num[0] == 0

    def to_fraction(self) -> Fraction:
        if self._n != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def __int__(self) -> int:
        q = self.to_fraction()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return q.numerator

    def __complex__(self) -> complex:
        n = self._n
        return sum(c * cmath.exp(2j * math.pi * i / n) for i, c in enumerate(self._num)) / self._den

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other: Number) -> "Cyclotomic":
        return other if isinstance(other, Cyclotomic) else Cyclotomic(other)

    def __add__(self, other: Number) -> "Cyclotomic":
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        other = self._lift(other)
        if self._n == 1 and other._n == 1:
            return Cyclotomic(Fraction(self._num[0], self._den) + Fraction(other._num[0], other._den))
        n = math.lcm(self._n, other._n)
        a = _embed(self._num, self._n, n)
        b = _embed(other._num, other._n, n)
        den = self._den * other._den
        return Cyclotomic._make(n, [x * other._den + y * self._den for x, y in zip(a, b)], den)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic._make(self._n, [-c for c in self._num], self._den, minimize=False)

    def __sub__(self, other: Number) -> "Cyclotomic":
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other: Number) -> "Cyclotomic":
        return self._lift(other) - self

    def __mul__(self, other: Number) -> "Cyclotomic":
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        other = self._lift(other)
        if other._n == 1:
            return Cyclotomic._make(
                self._n, [c * other._num[0] for c in self._num], self._den * other._den, minimize=other._num[0] == 0
            )
        if self._n == 1:
            return other * self
        n = math.lcm(self._n, other._n)
        a = _embed(self._num, self._n, n)
        b = _embed(other._num, other._n, n)
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic._make(n, _reduce(prod, n), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other._n != 1:
                return self * other.inverse()
            other = other.to_fraction()
        q = Fraction(other)
        if q == 0:
            raise ZeroDivisionError("division by zero cyclotomic")
        return Cyclotomic._make(self._n, [c * q.denominator for c in self._num], self._den * q.numerator)

    def __rtruediv__(self, other: Number) -> "Cyclotomic":
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self._n == 1:
            return Cyclotomic(1 / self.to_fraction())
        # x^-1 = (product of the other Galois conjugates) / norm
        others = Cyclotomic(1)
        for k in range(2, self._n):
            if math.gcd(k, self._n) == 1:
                others = others * self.galois(k)
        norm = self * others
        return others / norm.to_fraction()

    def galois(self, k: int) -> "Cyclotomic":
        """Image under E(N) -> E(N)^k (k coprime to the conductor)."""
        n = self._n
        if math.gcd(k, n) != 1:
            raise ValueError(f"galois exponent {k} not coprime to conductor {n}")
        if n == 1:
            return self
        terms: dict[int, int] = {}
        for i, c in enumerate(self._num):
            if c:
                e = (i * k) % n
                terms[e] = terms.get(e, 0) + c
        return Cyclotomic._make(n, _from_exponents(n, terms), self._den)

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    def galois_orbit(self) -> list["Cyclotomic"]:
        seen: list[Cyclotomic] = []
        for k in range(1, max(self._n, 2)):
            if math.gcd(k, self._n) == 1:
                img = self.galois(k)
                if img not in seen:
                    seen.append(img)
        return seen

    # -- comparison & hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._n == 1 and Fraction(self._num[0], self._den) == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self._n == other._n and self._den == other._den and self._num == other._num

    def __hash__(self) -> int:
        if self._hash is None:
            if self._n == 1:
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self._n, self._num, self._den))
        return self._hash

    def sort_key(self) -> tuple:
        return (self._n, tuple(Fraction(c, self._den) for c in self._num))

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        n = self._n
        out = []
        for i, c in enumerate(self._num):
            if not c:
                continue
            q = Fraction(c, self._den)
            sign = "-" if q < 0 else "+"
            mag = abs(q)
            if i == 0:
                body = _fmt_rational(mag)
            else:
                root = f"E({n})" if i == 1 else f"E({n})^{i}"
                body = root if mag == 1 else f"{_fmt_rational(mag)}*{root}"
            out.append((sign, body))
        if not out:
            return "0"
        text = "".join(s + b for s, b in out)
        return text[1:] if text.startswith("+") else text

    def __repr__(self) -> str:
        return f"Cyclotomic({str(self)!r})"


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def E(n: int) -> Cyclotomic:
    return Cyclotomic.root_of_unity(n)


def _squarefree_split(x: int) -> tuple[int, int]:
    """Return (s, d) with x = s^2 * d and d squarefree (sign kept in d)."""
    if x == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if x < 0 else 1
    s, d = 1, 1
    for p, e in factorint(abs(x)).items():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, sign * d


def sqrt_cyclotomic(d: int) -> Cyclotomic:
    """Principal square root of an integer: positive real, or i times one."""
    if d == 0:
        return Cyclotomic(0)
    s, sq = _squarefree_split(d)
    root = Cyclotomic(s)
    for p in prime_factors(abs(sq)):
        root = root * _sqrt_prime(p)
    if sq < 0:
        root = root * E(4)
    return root


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> Cyclotomic:
    if p == 2:
        return E(8) - E(8) ** 3
    # quadratic Gauss sum equals sqrt(p) for p = 1 mod 4 and i*sqrt(p) otherwise
    gauss = Cyclotomic.from_exponents(p, {k: (1 if pow(k, (p - 1) // 2, p) == 1 else -1) for k in range(1, p)})
    return gauss if p % 4 == 1 else gauss * (-E(4))
