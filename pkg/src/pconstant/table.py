"""Character table container shared by the Sym_n, Alt_n and Dixon builders."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .cyclotomic import Cyclotomic


class OrthogonalityError(ValueError):
    pass


@dataclass
class ClassInfo:
    name: str
    size: int
    order: int
    representative: Any = None

    def centralizer_order(self, group_order: int) -> int:
        return group_order // self.size


@dataclass
class CharacterTable:
    """Classes x irreducible characters with exact cyclotomic values.

    ``power_maps[t][j]`` is the index of the class containing the t-th
    power of an element of class ``j``.
    """

    name: str
    order: int
    classes: list[ClassInfo]
    rows: list[list[Cyclotomic]]
    power_maps: dict[int, list[int]] = field(default_factory=dict)
    row_labels: list[str] | None = None

    def __post_init__(self):
        self.rows = [[v if isinstance(v, Cyclotomic) else Cyclotomic(v) for v in row] for row in self.rows]

    @property
    def degrees(self) -> list[int]:
        return [int(row[0]) for row in self.rows]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def exponent(self) -> int:
        return math.lcm(*(c.order for c in self.classes))

    def label(self, i: int) -> str:
        if self.row_labels is not None:
            return self.row_labels[i]
        return f"X.{i + 1}"

    def is_integral(self) -> bool:
        return all(v.is_integer() for row in self.rows for v in row)

    # -- structural checks ---------------------------------------------------

    def check(self) -> None:
        """Raise OrthogonalityError unless every table invariant holds exactly."""
        k = len(self.classes)
        if any(len(row) != k for row in self.rows):
            raise OrthogonalityError("row length differs from class count")
        if len(self.rows) != k:
            raise OrthogonalityError(f"{len(self.rows)} rows for {k} classes")
        if sum(c.size for c in self.classes) != self.order:
            raise OrthogonalityError("class sizes do not sum to the group order")
        if self.classes[0].order != 1 or self.classes[0].size != 1:
            raise OrthogonalityError("first class must be the identity")
        degs = self.degrees
        if any(d <= 0 or self.order % d for d in degs):
            raise OrthogonalityError(f"degrees {degs} do not all divide {self.order}")
        if sum(d * d for d in degs) != self.order:
            raise OrthogonalityError("sum of squared degrees differs from the group order")
        if self.is_integral():
            self._check_integral()
        else:
            self._check_general()

    def _check_integral(self) -> None:
        vals = [[int(v) for v in row] for row in self.rows]
        sizes = [c.size for c in self.classes]
        k = len(sizes)
        for i in range(k):
            for j in range(i, k):
                s = sum(h * a * b for h, a, b in zip(sizes, vals[i], vals[j]))
                if s != (self.order if i == j else 0):
                    raise OrthogonalityError(f"rows {i} and {j} are not orthogonal")
        cols = list(zip(*vals))
        for a in range(k):
            for b in range(a, k):
                s = sum(x * y for x, y in zip(cols[a], cols[b]))
                want = self.order // sizes[a] if a == b else 0
                if s != want:
                    raise OrthogonalityError(f"columns {a} and {b} are not orthogonal")

    def _check_general(self) -> None:
        sizes = [c.size for c in self.classes]
        k = len(sizes)
        conj = [[v.conjugate() for v in row] for row in self.rows]
        for i in range(k):
            for j in range(i, k):
                s = Cyclotomic(0)
                for h, a, b in zip(sizes, self.rows[i], conj[j]):
                    s = s + a * b * h
                if s != (self.order if i == j else 0):
                    raise OrthogonalityError(f"rows {i} and {j} are not orthogonal")
        for a in range(k):
            for b in range(a, k):
                s = Cyclotomic(0)
                for r in range(k):
                    s = s + self.rows[r][a] * conj[r][b]
                want = self.order // sizes[a] if a == b else 0
                if s != want:
                    raise OrthogonalityError(f"columns {a} and {b} are not orthogonal")

    def is_valid(self) -> bool:
        try:
            self.check()
        except OrthogonalityError:
            return False
        return True

    # -- reordering ------------------------------------------------------------

    def row_key(self, i: int) -> tuple:
        row = self.rows[i]
        return (int(row[0]), tuple(v.sort_key() for v in row))

    def canonical(self) -> "CharacterTable":
        """Copy with rows sorted by degree, then lexicographically by values."""
        order = sorted(range(len(self.rows)), key=self.row_key)
        labels = [self.row_labels[i] for i in order] if self.row_labels else None
        return CharacterTable(
            self.name, self.order, list(self.classes), [list(self.rows[i]) for i in order], dict(self.power_maps), labels
        )

    def permute_columns(self, perm: Sequence[int]) -> "CharacterTable":
        """Reorder classes so that new column ``c`` is old column ``perm[c]``."""
        inv = {old: new for new, old in enumerate(perm)}
        classes = [self.classes[i] for i in perm]
        rows = [[row[i] for i in perm] for row in self.rows]
        pmaps = {t: [inv[m[perm[c]]] for c in range(len(perm))] for t, m in self.power_maps.items()}
        return CharacterTable(self.name, self.order, classes, rows, pmaps, self.row_labels)

    def same_characters(self, other: "CharacterTable") -> bool:
        """True when both tables have identical rows up to row order."""
        if self.order != other.order or len(self.classes) != len(other.classes):
            return False
        a = [tuple(r) for r in self.canonical().rows]
        b = [tuple(r) for r in other.canonical().rows]
        return a == b

    def inner_product(self, a: Sequence[Cyclotomic], b: Sequence[Cyclotomic]) -> Fraction | Cyclotomic:
        s = Cyclotomic(0)
        for c, x, y in zip(self.classes, a, b):
            s = s + x * y.conjugate() * c.size
        s = s / self.order
        return s.to_fraction() if s.is_rational() else s
