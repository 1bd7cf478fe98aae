"""Permutation groups by full element enumeration.

Elements are stored as rows of a ``uint8`` array (0-based images), so the
degree is limited to 256 points. Products follow the left-to-right
convention: ``x * y`` applies ``x`` first, i.e. ``(x * y)[i] = y[x[i]]``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import _backend
from ._pykernels import ClosureOverflow

DEFAULT_BOUND = 2**21
MAX_DEGREE = 256


class InvalidPermutation(ValueError):
    pass


class BoundExceeded(RuntimeError):
    def __init__(self, found: int, bound: int):
        super().__init__(f"group has more than {bound} elements (stopped at {found})")
        self.found = found
        self.bound = bound


def default_bound() -> int:
    env = os.environ.get("PCONST_BOUND")
    return int(env) if env else DEFAULT_BOUND


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"not a bijection on 0..{len(images) - 1}: {images}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        """Build from 1-based cycles, e.g. ``[(1, 2, 3), (4, 5)]``."""
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise InvalidPermutation(f"point {pt} outside 1..{degree}")
                if pt in seen:
                    raise InvalidPermutation(f"point {pt} repeated")
                seen.add(pt)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                img[a - 1] = b - 1
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(other.images[i] for i in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x + 1)
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return math.lcm(*self.cycle_type()) if self.degree else 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) if cyc else "()"

    def __repr__(self) -> str:
        return f"Permutation({str(self)})"


@dataclass(frozen=True)
class ConjClass:
    representative: Permutation
    size: int
    element_order: int


def _cycle_orders(rows: np.ndarray) -> np.ndarray:
    """Element orders for a batch of permutations (rows of images)."""
    n = rows.shape[1]
    orders = np.ones(len(rows), dtype=np.int64)
    cur = rows.astype(np.int64)
    # order of x = lcm of the least k with x^k fixing each point; track per point
    ident = np.arange(n)
    pos = np.broadcast_to(ident, rows.shape).copy()
    steps = np.zeros(rows.shape, dtype=np.int64)
    done = np.zeros(rows.shape, dtype=bool)
    for k in range(1, n + 1):
        pos = np.take_along_axis(cur, pos, axis=1)
        hit = (pos == ident) & ~done
        steps[hit] = k
        done |= hit
        if done.all():
            break
    for col in range(n):
        orders = np.lcm(orders, steps[:, col])
    return orders


class PermutationGroup:
    """A permutation group with its full element list."""

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None, bound: int | None = None):
        if degree is None:
            if not generators:
                raise InvalidPermutation("need a degree or at least one generator")
            degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise InvalidPermutation("generators have different degrees")
        if degree > MAX_DEGREE:
            raise InvalidPermutation(f"degree {degree} exceeds {MAX_DEGREE}")
        self.degree = degree
        self.generators = list(generators)
        self.bound = default_bound() if bound is None else bound
        gens = np.array([g.images for g in generators] or [list(range(degree))], dtype=np.uint8)
        gens = gens.reshape(-1, degree)
        try:
            self.elements = _backend.closure(gens, self.bound)
        except ClosureOverflow as exc:
            raise BoundExceeded(exc.found, self.bound) from None

    @property
    def order(self) -> int:
        return len(self.elements)

    def element(self, i: int) -> Permutation:
        return Permutation(self.elements[i].tolist())

    # -- lookup --------------------------------------------------------------

    @cached_property
    def base(self) -> list[int]:
        """Points whose images determine an element (a base in the usual sense)."""
        n = self.degree
        ident = np.arange(n, dtype=np.uint8)
        active = self.elements
        base: list[int] = []
        while len(active) > 1:
            moved = np.nonzero((active != ident).any(axis=0))[0]
            b = int(moved[0])
            base.append(b)
            active = active[active[:, b] == b]
        return base

    @cached_property
    def _lookup(self):
        base = self.base
        if not base:
            return ("int", np.zeros(1, dtype=np.int64), np.zeros(1, dtype=np.int64))
        if self.degree ** len(base) < 2**63:
            keys = self._keys(self.elements[:, base])
            order = np.argsort(keys, kind="stable")
            return ("int", keys[order], order)
        table = {row.tobytes(): i for i, row in enumerate(np.ascontiguousarray(self.elements[:, base]))}
        return ("dict", table, None)

    def _keys(self, base_images: np.ndarray) -> np.ndarray:
        keys = np.zeros(len(base_images), dtype=np.int64)
        for col in range(base_images.shape[1] - 1, -1, -1):
            keys = keys * self.degree + base_images[:, col].astype(np.int64)
        return keys

    def index_from_base(self, base_images: np.ndarray) -> np.ndarray:
        """Element indices for rows holding the images of the base points."""
        kind, keys, order = self._lookup
        base_images = np.asarray(base_images)
        if not self.base:
            return np.zeros(len(base_images), dtype=np.int64)
        base_images = base_images.reshape(-1, len(self.base))
        if kind == "int":
            q = self._keys(base_images)
            pos = np.searchsorted(keys, q)
            pos = np.minimum(pos, len(keys) - 1)
            if not np.array_equal(keys[pos], q):
                raise InvalidPermutation("element not in group")
            return order[pos]
        try:
            return np.array([keys[r.tobytes()] for r in np.ascontiguousarray(base_images, dtype=np.uint8)])
        except KeyError:
            raise InvalidPermutation("element not in group") from None

    def index(self, x: Permutation) -> int:
        return int(self.index_from_base(np.array([x.images], dtype=np.uint8)[:, self.base])[0])

    # -- classes -------------------------------------------------------------

    @cached_property
    def element_orders(self) -> np.ndarray:
        return _cycle_orders(self.elements)

    @cached_property
    def _class_data(self):
        base = np.array(self.base, dtype=np.int64)
        n_el = self.order
        rows, cols = [], []
        for g in self.generators:
            gi = np.array(g.inverse().images)
            gimg = np.array(g.images, dtype=np.uint8)
            # (g^-1 x g)[b] = g[x[g^-1[b]]]
            imgs = gimg[self.elements[:, gi[base]]]
            rows.append(np.arange(n_el))
            cols.append(self.index_from_base(imgs))
        if rows:
            r, c = np.concatenate(rows), np.concatenate(cols)
            graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(n_el, n_el))
            _, raw = connected_components(graph, directed=True, connection="weak")
        else:
            raw = np.arange(n_el)
        sizes = np.bincount(raw)
        by_label = np.argsort(raw, kind="stable")
        bounds = np.concatenate([[0], np.cumsum(sizes)])
        reps = {}
        for lab in range(len(sizes)):
            cand = by_label[bounds[lab]:bounds[lab + 1]]
            # lexicographically least member, narrowing one column at a time
            for col in range(self.degree):
                if len(cand) == 1:
                    break
                vals = self.elements[cand, col]
                cand = cand[vals == vals.min()]
            reps[lab] = int(cand[0])
        orders = {lab: self.element(r).order() for lab, r in reps.items()}
        keyed = sorted(
            range(len(sizes)),
            key=lambda lab: (orders[lab], int(sizes[lab]), self.elements[reps[lab]].tolist()),
        )
        relabel = np.empty(len(sizes), dtype=np.int64)
        for new, old in enumerate(keyed):
            relabel[old] = new
        class_of = relabel[raw]
        classes = [ConjClass(self.element(reps[old]), int(sizes[old]), orders[old]) for old in keyed]
        return classes, class_of, [reps[old] for old in keyed]

    @property
    def conjugacy_classes(self) -> list[ConjClass]:
        return self._class_data[0]

    @property
    def class_of(self) -> np.ndarray:
        """Class index of every element."""
        return self._class_data[1]

    def class_index(self, x: Permutation) -> int:
        return int(self.class_of[self.index(x)])

    def power_map(self, t: int) -> list[int]:
        return [self.class_index(c.representative ** t) for c in self.conjugacy_classes]

    @cached_property
    def inverse_classes(self) -> list[int]:
        return self.power_map(-1)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(c.element_order for c in self.conjugacy_classes))


def enumerate_group(gens: Sequence[Permutation], bound: int | None = None, degree: int | None = None) -> PermutationGroup:
    return PermutationGroup(gens, degree=degree, bound=bound)


def conjugacy_classes(G: PermutationGroup) -> list[ConjClass]:
    return G.conjugacy_classes


def power_map(G: PermutationGroup, classes: Sequence[ConjClass] | None, t: int) -> list[int]:
    return G.power_map(t)
