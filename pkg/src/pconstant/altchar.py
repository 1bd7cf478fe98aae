"""Character tables of the alternating groups, derived from Sym_n.

Rows come from restricting chi_lam for lam > lam^T, and from splitting
chi_lam in two for self-conjugate lam. The split characters differ only
on the pair of Alt_n classes whose cycle type is the principal hook
lengths of lam.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from sympy import jacobi_symbol

from .cyclotomic import Cyclotomic, _squarefree_split, sqrt_cyclotomic
from .partition import Partition, conjugate, partitions, principal_hooks
from .symchar import (
    DEFAULT_BOUND,
    BoundExceeded,
    _beta,
    _mn,
    _prime_divisors,
    class_size,
    cycle_type_order,
    cycle_type_sign,
    power_cycle_type,
)
from .table import CharacterTable, ClassInfo


@dataclass(frozen=True)
class QuadraticValue:
    """``a + b*sqrt(radicand)`` with a squarefree radicand."""

    a: Fraction
    b: Fraction = Fraction(0)
    radicand: int = 1

    def __post_init__(self):
        a, b, d = Fraction(self.a), Fraction(self.b), int(self.radicand)
        if d == 0:
            raise ValueError("radicand must be nonzero")
        s, d = _squarefree_split(d)
        b *= s
        if d == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            d = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "radicand", d)

    def is_rational(self) -> bool:
        return self.b == 0

    def to_cyclotomic(self) -> Cyclotomic:
        if self.b == 0:
            return Cyclotomic(self.a)
        return Cyclotomic(self.a) + sqrt_cyclotomic(self.radicand) * self.b

    def __str__(self) -> str:
        if self.b == 0:
            return _fmt(self.a)
        coef = "" if abs(self.b) == 1 else _fmt(abs(self.b)) + "*"
        surd = f"{coef}SQRT({self.radicand})"
        if self.a == 0:
            return ("-" if self.b < 0 else "") + surd
        return _fmt(self.a) + ("-" if self.b < 0 else "+") + surd

    @classmethod
    def parse(cls, text: str) -> "QuadraticValue":
        text = text.replace(" ", "")
        m = re.fullmatch(r"([+-]?\d+(?:/\d+)?)?(?:([+-])(?:(\d+(?:/\d+)?)\*)?SQRT\((-?\d+)\))?", text)
        if m is None or not text:
            raise ValueError(f"bad quadratic value {text!r}")
        a = Fraction(m.group(1)) if m.group(1) else Fraction(0)
        if m.group(4) is None:
            return cls(a)
        b = Fraction(m.group(3)) if m.group(3) else Fraction(1)
        if m.group(2) == "-":
            b = -b
        return cls(a, b, int(m.group(4)))

    @classmethod
    def from_cyclotomic(cls, x: Cyclotomic) -> "QuadraticValue | None":
        """The value as a + b*sqrt(d), or None if it is not quadratic."""
        if x.is_rational():
            return cls(x.to_fraction())
        orbit = x.galois_orbit()
        if len(orbit) != 2:
            return None
        other = orbit[1]
        a = ((x + other) / 2).to_fraction()
        delta = (x - other) / 2
        r = (delta * delta).to_fraction()
        s, d = _squarefree_split(r.numerator * r.denominator)
        b = Fraction(s, r.denominator)
        if sqrt_cyclotomic(d) * b != delta:
            b = -b
        return cls(a, b, d)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class AltClass:
    mu: Partition
    split: bool
    tag: str  # "+", "-" or "single"

    @property
    def name(self) -> str:
        return str(self.mu) + ("" if self.tag == "single" else self.tag)


def is_split_type(mu) -> bool:
    mu = tuple(mu)
    return all(x % 2 for x in mu) and len(set(mu)) == len(mu)


def alt_classes(n: int) -> list[AltClass]:
    """Even cycle types, identity first; split types appear as a +/- pair."""
    if n < 3:
        raise ValueError("alt_classes needs n >= 3")
    out = []
    for mu in sorted(partitions(n)):
        if cycle_type_sign(mu) != 1:
            continue
        if is_split_type(mu):
            out.append(AltClass(mu, True, "+"))
            out.append(AltClass(mu, True, "-"))
        else:
            out.append(AltClass(mu, False, "single"))
    return out


def standard_representative(mu, degree: int | None = None) -> tuple[int, ...]:
    """Images (0-based) of the permutation filling cycles with consecutive points."""
    n = sum(mu) if degree is None else degree
    img = list(range(n))
    start = 0
    for part in mu:
        for i in range(part):
            img[start + i] = start + (i + 1) % part
        start += part
    return tuple(img)


def _power_tag(mu, tag: str, t: int) -> str:
    sign = 1
    for part in mu:
        sign *= jacobi_symbol(t, part) if part > 1 else 1
    if sign == 1:
        return tag
    return "-" if tag == "+" else "+"


@dataclass(frozen=True)
class AltRow:
    partition: Partition
    tag: str  # "" for restrictions, "+"/"-" for the split pair

    @property
    def label(self) -> str:
        return str(self.partition) + self.tag


def alt_rows(n: int) -> list[AltRow]:
    rows = []
    for lam in sorted(partitions(n)):
        conj = conjugate(lam)
        if lam == conj:
            rows.append(AltRow(lam, "+"))
            rows.append(AltRow(lam, "-"))
        elif lam > conj:
            rows.append(AltRow(lam, ""))
    return rows


def split_values(lam) -> tuple[QuadraticValue, QuadraticValue]:
    """Values (tau_+(sigma_+), tau_+(sigma_-)) on the principal-hook class."""
    hooks = principal_hooks(lam)
    n, r = sum(lam), len(hooks)
    eps = -1 if ((n - r) // 2) % 2 else 1
    m = math.prod(hooks)
    return (
        QuadraticValue(Fraction(eps, 2), Fraction(1, 2), eps * m),
        QuadraticValue(Fraction(eps, 2), Fraction(-1, 2), eps * m),
    )


def alt_character_table(n: int, bound: int = DEFAULT_BOUND) -> CharacterTable:
    if n < 3:
        raise ValueError("alt_character_table needs n >= 3")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the configured bound {bound}")
    classes = alt_classes(n)
    rows_meta = alt_rows(n)
    cache: dict = {}
    sym_vals = {
        (lam, cls.mu): _mn(_beta(tuple(lam)), tuple(cls.mu), cache)
        for lam in {r.partition for r in rows_meta}
        for cls in classes
    }
    rows = []
    for row in rows_meta:
        lam = row.partition
        if not row.tag:
            rows.append([Cyclotomic(sym_vals[lam, c.mu]) for c in classes])
            continue
        hooks = Partition(principal_hooks(lam))
        plus, minus = (v.to_cyclotomic() for v in split_values(lam))
        vals = []
        for c in classes:
            if c.mu == hooks:
                same = (c.tag == "+") == (row.tag == "+")
                vals.append(plus if same else minus)
            else:
                vals.append(Cyclotomic(sym_vals[lam, c.mu]) / 2)
        rows.append(vals)

    index = {(c.mu, c.tag): i for i, c in enumerate(classes)}
    infos = [
        ClassInfo(c.name, class_size(c.mu) // (2 if c.split else 1), cycle_type_order(c.mu), c) for c in classes
    ]
    exponent = math.lcm(*(c.order for c in infos))
    pmaps = {}
    for t in _prime_divisors(exponent):
        images = []
        for c in classes:
            nu = power_cycle_type(c.mu, t)
            if is_split_type(nu):
                images.append(index[nu, _power_tag(c.mu, c.tag, t)])
            else:
                images.append(index[nu, "single"])
        pmaps[t] = images
    return CharacterTable(
        f"Alt{n}", math.factorial(n) // 2, infos, rows, pmaps, [r.label for r in rows_meta]
    )


def row_partition(label: str) -> Partition:
    return Partition.parse(label.rstrip("+-"))


def p_constant_alt(n: int, p: int, bound: int = DEFAULT_BOUND):
    """Rows of the Alt_n table constant on the p-singular classes."""
    from .pconst import p_constant_report

    if n < 5:
        raise ValueError("p_constant_alt needs n >= 5")
    report = p_constant_report(alt_character_table(n, bound), p)
    return [e for e in report.entries if e.is_constant]
