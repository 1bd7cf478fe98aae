"""Orders of finite groups of Lie type and the |G|_p -/+ 1 divisibility tests.

Orders are those of the simply connected groups. For the Suzuki and Ree
families the parameter is ``Q = q^2`` (an odd power of 2 or 3), and the
p-part is written as a power of ``Q``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from sympy import divisors, factorint, isprime, mobius, perfect_power

SERIES = ("A", "2A", "B", "C", "D", "2D", "3D4", "E6", "2E6", "E7", "E8", "F4", "2F4", "G2", "2B2", "2G2")
_FIXED_RANK = {"3D4": 4, "E6": 6, "2E6": 6, "E7": 7, "E8": 8, "F4": 4, "2F4": 4, "G2": 2, "2B2": 2, "2G2": 2}
_MIN_RANK = {"A": 1, "2A": 2, "B": 2, "C": 2, "D": 3, "2D": 2}
TWISTED_PARAMETER = {"2B2": 2, "2F4": 2, "2G2": 3}


class InvalidParameter(ValueError):
    pass


@dataclass(frozen=True)
class LieFamily:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise InvalidParameter(f"unknown series {self.series!r}")
        if self.series in _FIXED_RANK:
            if self.rank != _FIXED_RANK[self.series]:
                raise InvalidParameter(f"{self.series} has rank {_FIXED_RANK[self.series]}")
        elif self.rank < _MIN_RANK[self.series]:
            raise InvalidParameter(f"{self.series}{self.rank}: rank must be at least {_MIN_RANK[self.series]}")

    @property
    def name(self) -> str:
        return self.series if self.series in _FIXED_RANK else f"{self.series}{self.rank}"

    @property
    def twisted_parameter(self) -> int | None:
        """2 or 3 for the Suzuki/Ree families, whose parameter is q^2."""
        return TWISTED_PARAMETER.get(self.series)

    def label(self, q: int) -> str:
        return f"{self.name}({q})"

    @classmethod
    def parse(cls, text: str) -> "LieFamily":
        text = text.strip().replace("^", "")
        if text in _FIXED_RANK:
            return cls(text, _FIXED_RANK[text])
        m = re.fullmatch(r"(2A|2D|A|B|C|D)(\d+)", text)
        if m is None:
            raise InvalidParameter(f"unknown family {text!r}")
        return cls(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class OrderData:
    order: int
    p_part: int
    m: int  # p_part = q**m, with q the family parameter (q^2 for Suzuki/Ree)
    p: int


def prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise InvalidParameter(f"q={q} is not a prime power")
    if isprime(q):
        return q, 1
    pp = perfect_power(q)
    if not pp or not isprime(pp[0]):
        raise InvalidParameter(f"q={q} is not a prime power")
    return int(pp[0]), int(pp[1])


def _check_parameter(f: LieFamily, q: int) -> int:
    p, e = prime_power(q)
    base = f.twisted_parameter
    if base is not None and (p != base or e % 2 == 0):
        raise InvalidParameter(f"{f.name} needs q^2 = {base}^(2n+1), got {q}")
    return p


def _prod(factors) -> int:
    out = 1
    for x in factors:
        out *= x
    return out


def _polynomial(f: LieFamily, q: int) -> tuple[int, int]:
    """Return (m, prime-to-p part) of the order."""
    n, s = f.rank, f.series
    if s == "A":
        return n * (n + 1) // 2, _prod(q**i - 1 for i in range(2, n + 2))
    if s == "2A":
        return n * (n + 1) // 2, _prod(q**i - (-1) ** i for i in range(2, n + 2))
    if s in ("B", "C"):
        return n * n, _prod(q ** (2 * i) - 1 for i in range(1, n + 1))
    if s == "D":
        return n * (n - 1), (q**n - 1) * _prod(q ** (2 * i) - 1 for i in range(1, n))
    if s == "2D":
        return n * (n - 1), (q**n + 1) * _prod(q ** (2 * i) - 1 for i in range(1, n))
    if s == "3D4":
        return 12, (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
    if s == "G2":
        return 6, (q**6 - 1) * (q**2 - 1)
    if s == "F4":
        return 24, _prod(q**d - 1 for d in (2, 6, 8, 12))
    if s == "E6":
        return 36, _prod(q**d - 1 for d in (2, 5, 6, 8, 9, 12))
    if s == "2E6":
        return 36, (q**5 + 1) * (q**9 + 1) * _prod(q**d - 1 for d in (2, 6, 8, 12))
    if s == "E7":
        return 63, _prod(q**d - 1 for d in (2, 6, 8, 10, 12, 14, 18))
    if s == "E8":
        return 120, _prod(q**d - 1 for d in (2, 8, 12, 14, 18, 20, 24, 30))
    if s == "2B2":
        return 2, (q - 1) * (q**2 + 1)
    if s == "2G2":
        return 3, (q - 1) * (q**3 + 1)
    if s == "2F4":
        return 12, (q - 1) * (q**3 + 1) * (q**4 - 1) * (q**6 + 1)
    raise InvalidParameter(s)  # pragma: no cover


def group_order(f: LieFamily, q: int) -> OrderData:
    p = _check_parameter(f, q)
    m, rest = _polynomial(f, q)
    return OrderData(q**m * rest, q**m, m, p)


# -- Zsigmondy primes ------------------------------------------------------------

_SEARCH_LIMIT = 10**6
_FACTOR_LIMIT = 10**40  # above this, Phi_n(a) is not factored completely


def _has_order(a: int, n: int, ell: int) -> bool:
    if a % ell == 0 or pow(a, n, ell) != 1:
        return False
    return all(pow(a, n // r, ell) != 1 for r in factorint(n))


def _cyclotomic_value(n: int, a: int) -> int:
    # Phi_n(a) = prod over d | n of (a^d - 1)^mu(n/d)
    num, den = 1, 1
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num *= a**d - 1
        elif mu == -1:
            den *= a**d - 1
    return num // den


def primitive_prime(a: int, n: int, search_limit: int = _SEARCH_LIMIT, complete: bool = True) -> int | None:
    """Least prime dividing a^n - 1 but no a^i - 1 with i < n (any n >= 1).

    Returns None if there is none. For very large ``a^n`` the answer is only
    looked for below ``search_limit``; with ``complete=False`` no
    factorisation is attempted at all.
    """
    if n == 1:
        x = a - 1
        return int(min(factorint(x))) if x > 1 else None
    phi = _cyclotomic_value(n, a)
    # a primitive divisor ell has order n mod ell, so ell = 1 (mod n) and ell | Phi_n(a)
    ell = n + 1
    top = min(phi, search_limit)
    while ell <= top:
        if phi % ell == 0 and isprime(ell) and _has_order(a, n, ell):
            return ell
        ell += n
    if phi <= search_limit or phi > _FACTOR_LIMIT or not complete:
        return None
    candidates = [r for r in factorint(phi) if _has_order(a, n, r)]
    return min(candidates) if candidates else None


def zsigmondy(a: int, n: int) -> int | None:
    if a < 2 or n < 3:
        raise ValueError("zsigmondy needs a >= 2 and n >= 3")
    return primitive_prime(a, n)


# -- divisibility ----------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """Why |G|_p -/+ 1 does not divide |G|.

    ``factor`` divides |G|_p -/+ 1 but not |G|. Usually it is a divisor of
    Phi_index(q) coprime to |G|; when no such divisor exists it is the full
    ``prime``-part of |G|_p -/+ 1, whose valuation exceeds that of |G|. ``prime`` is a prime divisor of ``factor`` when one was found
    cheaply (a Zsigmondy prime of q^index - 1 in the usual case), else None.
    """

    index: int
    factor: int
    prime: int | None

    @property
    def order(self) -> int:
        return self.index


@dataclass(frozen=True)
class DivisibilityResult:
    family: LieFamily
    q: int
    sign: int
    divides: bool
    witness: Witness | None
    data: OrderData


def _coprime_part(g: int, order: int) -> int:
    while True:
        c = math.gcd(g, order)
        if c == 1:
            return g
        g //= c


def _cheap_prime(g: int) -> int | None:
    if isprime(g):
        return g
    small = factorint(g, limit=10**5, use_rho=False, use_pm1=False, use_ecm=False)
    least = int(min(small))
    return least if least < 10**5 or isprime(least) else None


def _excess_prime(x: int, order: int) -> int:
    # primes of r are exactly those with v_ell(x) > v_ell(order)
    r = x // math.gcd(x, order)
    return _cheap_prime(r) or int(min(factorint(r)))


def divides_pm(f: LieFamily, q: int, sign: int) -> DivisibilityResult:
    """Whether |G|_p - 1 (sign -1) or |G|_p + 1 (sign +1) divides |G|."""
    if sign not in (1, -1):
        raise InvalidParameter("sign must be +1 or -1")
    data = group_order(f, q)
    x = data.p_part + sign
    if data.order % x == 0:
        return DivisibilityResult(f, q, sign, True, None, data)
    return DivisibilityResult(f, q, sign, False, _witness(q, data.m, sign, x, data.order), data)


def _witness(q: int, m: int, sign: int, x: int, order: int) -> Witness:
    # x divides q^(2m) - 1 = prod Phi_d(q) over d | 2m; the largest d comes first
    for d in sorted(divisors(2 * m), reverse=True):
        if sign < 0 and m % d:
            continue
        g = _coprime_part(math.gcd(x, _cyclotomic_value(d, q)), order)
        if g > 1:
            ell = primitive_prime(q, d, search_limit=10**5, complete=False) if d > 1 else None
            if ell is None or g % ell:
                ell = _cheap_prime(g)
            return Witness(d, g, ell)
    # only excess valuations of primes shared with |G| remain
    ell = _excess_prime(x, order)
    return Witness(_order_dividing(q, ell, 2 * m), ell ** _valuation(x, ell), ell)


def _order_dividing(q: int, ell: int, bound: int) -> int:
    """Multiplicative order of q mod ell, known to divide ``bound``."""
    return min(d for d in divisors(bound) if pow(q, d, ell) == 1)


def _valuation(x: int, ell: int) -> int:
    v = 0
    while x % ell == 0:
        x //= ell
        v += 1
    return v


# -- the expected lists and the scan ------------------------------------------------

def _canonical(f: LieFamily, q: int) -> tuple[str, int]:
    """Identify small-rank coincidences: D3 = A3, 2D3 = 2A3, 2D2(q) = A1(q^2), C2 = B2."""
    if f.series == "D" and f.rank == 3:
        return "A3", q
    if f.series == "2D" and f.rank == 3:
        return "2A3", q
    if f.series == "2D" and f.rank == 2:
        return "A1", q * q
    if f.series == "C" and f.rank == 2:
        return "B2", q
    return f.name, q


def expected(f: LieFamily, q: int, sign: int) -> bool:
    name, q = _canonical(f, q)
    if sign < 0:
        return name in ("A1", "A2", "B2", "G2") or (name, q) == ("A3", 2)
    return name in ("A1", "2A2", "2B2", "2G2")


@dataclass
class ScanEntry:
    family: str
    q: int
    minus: DivisibilityResult
    plus: DivisibilityResult
    notes: list[str] = field(default_factory=list)

    @property
    def matches(self) -> bool:
        f = self.minus.family
        return self.minus.divides == expected(f, self.q, -1) and self.plus.divides == expected(f, self.q, 1)


@dataclass
class ScanReport:
    q_max: int
    rank_max: int
    entries: list[ScanEntry]

    @property
    def mismatches(self) -> list[ScanEntry]:
        return [e for e in self.entries if not e.matches]

    def positives(self, sign: int) -> list[str]:
        out = []
        for e in self.entries:
            r = e.minus if sign < 0 else e.plus
            if r.divides:
                out.append(r.family.label(e.q))
        return out


def prime_powers(limit: int) -> list[int]:
    out = []
    for q in range(2, limit + 1):
        try:
            prime_power(q)
        except InvalidParameter:
            continue
        out.append(q)
    return out


def families(rank_max: int) -> list[LieFamily]:
    out = []
    for s in ("A", "2A", "B", "C", "D", "2D"):
        for n in range(_MIN_RANK[s], rank_max + 1):
            out.append(LieFamily(s, n))
    for s, n in _FIXED_RANK.items():
        if n <= rank_max:
            out.append(LieFamily(s, n))
    return out


def twisted_parameters(f: LieFamily, q_max: int) -> list[int]:
    """Q = q^2 = base^(2k+1) with Q <= q_max^2."""
    base = f.twisted_parameter
    out, Q = [], base
    while Q <= q_max * q_max:
        out.append(Q)
        Q *= base * base
    return out


def scan_families(q_max: int, rank_max: int) -> ScanReport:
    if q_max < 2 or rank_max < 1:
        raise InvalidParameter("q_max >= 2 and rank_max >= 1 required")
    qs = prime_powers(q_max)
    entries = []
    for f in families(rank_max):
        params = twisted_parameters(f, q_max) if f.twisted_parameter else qs
        for q in params:
            minus, plus = divides_pm(f, q, -1), divides_pm(f, q, 1)
            entry = ScanEntry(f.name, q, minus, plus)
            m = minus.data.m
            if m <= 2 or (q, m) == (2, 6):
                entry.notes.append("no Zsigmondy prime for q^m - 1; checked directly")
            entries.append(entry)
    return ScanReport(q_max, rank_max, entries)
