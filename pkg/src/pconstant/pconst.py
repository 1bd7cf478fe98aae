"""Classification of irreducible characters constant on the p-singular classes."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cyclotomic import Cyclotomic
from .table import CharacterTable

LINEAR = "linear"
DEFECT_ZERO = "defect-zero"
CONSTANT = "constant"
IRRATIONAL_CONSTANT = "irrational-constant"
NONCONSTANT = "nonconstant"


class NoSingular(ValueError):
    """p does not divide the group order, so there are no p-singular elements."""


class IntegralityViolation(AssertionError):
    """A rational constant that is not an integer: the input table is wrong."""


def valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def p_singular_classes(T: CharacterTable, p: int) -> list[int]:
    if p < 2 or T.order % p:
        raise NoSingular(f"{p} does not divide |{T.name}| = {T.order}")
    return [j for j, c in enumerate(T.classes) if c.order % p == 0]


def p_element_classes(T: CharacterTable, p: int) -> list[int]:
    """Non-identity classes of p-power order (the unipotent classes in defining characteristic)."""
    if p < 2 or T.order % p:
        raise NoSingular(f"{p} does not divide |{T.name}| = {T.order}")
    out = []
    for j, c in enumerate(T.classes):
        o = c.order
        while o % p == 0:
            o //= p
        if o == 1 and c.order > 1:
            out.append(j)
    return out


def encode_value(x: Cyclotomic) -> str:
    """Exact text form: integers and rationals plainly, quadratics as a+b*SQRT(d)."""
    if x.is_rational():
        q = x.to_fraction()
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    from .altchar import QuadraticValue

    quad = QuadraticValue.from_cyclotomic(x)
    return str(quad) if quad is not None else str(x)


@dataclass(frozen=True)
class PConstEntry:
    row: int
    label: str
    degree: int
    constant: Cyclotomic | None  # None when the row is not constant on the chosen classes
    defect: int
    tag: str

    @property
    def is_constant(self) -> bool:
        return self.constant is not None

    @property
    def integer_constant(self) -> int | None:
        if self.constant is None or not self.constant.is_rational():
            return None
        return int(self.constant)

    def to_dict(self) -> dict:
        return {
            "row": self.row + 1,
            "label": self.label,
            "degree": self.degree,
            "constant": NONCONSTANT if self.constant is None else encode_value(self.constant),
            "defect": self.defect,
            "tag": self.tag,
        }


@dataclass(frozen=True)
class PConstReport:
    group: str
    p: int
    order: int
    classes: tuple[str, ...]  # names of the classes the constancy test ran over
    entries: tuple[PConstEntry, ...]

    def constant_entries(self) -> list[PConstEntry]:
        return [e for e in self.entries if e.is_constant]

    def nonlinear_nonzero_defect(self) -> list[PConstEntry]:
        """The interesting case: constant, nonlinear, positive defect."""
        return [e for e in self.entries if e.is_constant and e.degree > 1 and e.defect > 0]

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "p": self.p,
            "order": self.order,
            "classes": list(self.classes),
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _classify_row(degree: int, value: Cyclotomic | None, defect: int) -> str:
    if value is None:
        return NONCONSTANT
    if degree == 1:
        return LINEAR
    if not value.is_rational():
        return IRRATIONAL_CONSTANT
    if value.is_zero():
        return DEFECT_ZERO
    return CONSTANT


def p_constant_report(T: CharacterTable, p: int, classes: Sequence[int] | None = None) -> PConstReport:
    """Verdict for every row of T on the p-singular classes (or on ``classes``)."""
    cols = p_singular_classes(T, p) if classes is None else list(classes)
    if not cols:
        raise NoSingular(f"no classes to test for {T.name} at p={p}")
    full = valuation(T.order, p)
    entries = []
    for i, row in enumerate(T.rows):
        deg = int(row[0])
        first = row[cols[0]]
        const = first if all(row[j] == first for j in cols[1:]) else None
        if const is not None and const.is_rational() and const.to_fraction().denominator != 1:
            raise IntegralityViolation(f"{T.name} row {i + 1}: constant {const} on {p}-singular classes is not an integer")
        defect = full - valuation(deg, p)
        entries.append(PConstEntry(i, T.label(i), deg, const, defect, _classify_row(deg, const, defect)))
    return PConstReport(T.name, p, T.order, tuple(T.classes[j].name for j in cols), tuple(entries))


def sylow_is_cyclic(T: CharacterTable, p: int) -> bool:
    """A Sylow p-subgroup is cyclic iff some element has order |G|_p."""
    pp = p ** valuation(T.order, p)
    return any(c.order % pp == 0 for c in T.classes)
