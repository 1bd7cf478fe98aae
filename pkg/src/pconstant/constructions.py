"""Permutation generators for the fixture groups.

Matrix groups over small fields are turned into permutation groups by
their action on vectors or projective points. Vectors are row vectors
and matrices act on the right.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .perm import Permutation

_IRREDUCIBLE = {4: (1, 1, 1), 8: (1, 1, 0, 1), 9: (1, 0, 1)}  # low degree first: x^2+x+1, x^3+x+1, x^2+1


@dataclass(frozen=True)
class GF:
    """The field with q elements; elements are ints 0..q-1 (base-p digits)."""

    q: int

    @cached_property
    def p(self) -> int:
        for p in range(2, self.q + 1):
            if self.q % p == 0:
                return p
        raise ValueError(self.q)

    @cached_property
    def k(self) -> int:
        k, x = 0, 1
        while x < self.q:
            x *= self.p
            k += 1
        if x != self.q:
            raise ValueError(f"{self.q} is not a prime power")
        return k

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def _number(self, digits) -> int:
        return sum(d * self.p**i for i, d in enumerate(digits))

    @cached_property
    def _tables(self):
        q, p, k = self.q, self.p, self.k
        if k > 1 and q not in _IRREDUCIBLE:
            raise ValueError(f"no field polynomial stored for q={q}")
        add = [[self._number([(x + y) % p for x, y in zip(self._digits(a), self._digits(b))]) for b in range(q)] for a in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(q):
                da, db = self._digits(a), self._digits(b)
                prod = [0] * (2 * k - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        prod[i + j] += x * y
                if k > 1:
                    poly = _IRREDUCIBLE[q]
                    for deg in range(2 * k - 2, k - 1, -1):
                        c = prod[deg]
                        if c:
                            for i in range(k + 1):
                                prod[deg - k + i] -= c * poly[i]
                mul[a][b] = self._number([c % p for c in prod[:k]])
        return add, mul

    def add(self, a: int, b: int) -> int:
        return self._tables[0][a][b]

    def mul(self, a: int, b: int) -> int:
        return self._tables[1][a][b]

    def neg(self, a: int) -> int:
        return self._tables[0][a].index(0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError
        return self._tables[1][a].index(1)

    def power(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def frobenius(self, a: int) -> int:
        return self.power(a, self.p)

    @cached_property
    def primitive(self) -> int:
        for a in range(2, self.q) if self.q > 2 else [1]:
            x, n = a, 1
            while x != 1:
                x = self.mul(x, a)
                n += 1
            if n == self.q - 1:
                return a
        return 1

    def elements(self) -> range:
        return range(self.q)


Matrix = tuple[tuple[int, ...], ...]


def vec_mat(F: GF, v, m: Matrix) -> tuple[int, ...]:
    out = []
    for j in range(len(m[0])):
        s = 0
        for i, x in enumerate(v):
            if x:
                s = F.add(s, F.mul(x, m[i][j]))
        out.append(s)
    return tuple(out)


def mat_mul(F: GF, a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_mat(F, row, b) for row in a)


def normalize(F: GF, v) -> tuple[int, ...]:
    for x in v:
        if x:
            s = F.inv(x)
            return tuple(F.mul(s, y) for y in v)
    raise ValueError("zero vector has no projective point")


def nonzero_vectors(F: GF, dim: int) -> list[tuple[int, ...]]:
    return [v for v in itertools.product(F.elements(), repeat=dim) if any(v)]


def projective_points(F: GF, dim: int) -> list[tuple[int, ...]]:
    return sorted({normalize(F, v) for v in nonzero_vectors(F, dim)})


def action(points: list, image) -> Permutation:
    index = {pt: i for i, pt in enumerate(points)}
    return Permutation(index[image(pt)] for pt in points)


def elementary(F: GF, dim: int, i: int, j: int, a: int) -> Matrix:
    return tuple(tuple(a if (r, c) == (i, j) else int(r == c) for c in range(dim)) for r in range(dim))


def diagonal(entries) -> Matrix:
    n = len(entries)
    return tuple(tuple(entries[r] if r == c else 0 for c in range(n)) for r in range(n))


def sl2_matrices(q: int) -> list[Matrix]:
    F = GF(q)
    w = F.primitive
    mats = [elementary(F, 2, 0, 1, 1), elementary(F, 2, 1, 0, 1)]
    if F.k > 1:
        mats.append(diagonal([w, F.inv(w)]))
    return mats


def sl2_vectors(q: int) -> list[Permutation]:
    """SL2(q) on the q^2 - 1 nonzero vectors (faithful)."""
    F = GF(q)
    pts = nonzero_vectors(F, 2)
    return [action(pts, lambda v, m=m: vec_mat(F, v, m)) for m in sl2_matrices(q)]


def psl2_projective(q: int) -> list[Permutation]:
    """PSL2(q) on the q + 1 points of the projective line."""
    F = GF(q)
    pts = projective_points(F, 2)
    return [action(pts, lambda v, m=m: normalize(F, vec_mat(F, v, m))) for m in sl2_matrices(q)]


def psl3_projective(q: int) -> list[Permutation]:
    """PSL3(q) on the q^2 + q + 1 points of the projective plane (q prime)."""
    F = GF(q)
    pts = projective_points(F, 3)
    cyc = ((0, 1, 0), (0, 0, 1), (1, 0, 0))
    mats = [elementary(F, 3, 0, 1, 1), elementary(F, 3, 1, 0, 1), cyc]
    return [action(pts, lambda v, m=m: normalize(F, vec_mat(F, v, m))) for m in mats]


def sl_vectors_gf2(n: int) -> list[Permutation]:
    """SL_n(2) on the 2^n - 1 nonzero vectors."""
    F = GF(2)
    pts = nonzero_vectors(F, n)
    mats = [elementary(F, n, i, i + 1, 1) for i in range(n - 1)]
    mats += [elementary(F, n, i + 1, i, 1) for i in range(n - 1)]
    return [action(pts, lambda v, m=m: vec_mat(F, v, m)) for m in mats]


def psu3_isotropic(q: int) -> list[Permutation]:
    """PSU3(q) on the q^3 + 1 isotropic points of the antidiagonal hermitian form."""
    F = GF(q * q)
    bar = lambda a: F.power(a, q)  # noqa: E731

    def form(x, y):
        s = 0
        for i in range(3):
            s = F.add(s, F.mul(x[i], bar(y[2 - i])))
        return s

    def preserves(m: Matrix) -> bool:
        basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        rows = [vec_mat(F, e, m) for e in basis]
        return all(form(rows[i], rows[j]) == form(basis[i], basis[j]) for i in range(3) for j in range(3))

    mats = []
    for a, b, c in itertools.product(F.elements(), repeat=3):
        for m in (((1, a, b), (0, 1, c), (0, 0, 1)), ((1, 0, 0), (a, 1, 0), (b, c, 1))):
            if preserves(m):
                mats.append(m)
    pts = [v for v in projective_points(F, 3) if form(v, v) == 0]
    gens = [action(pts, lambda v, m=m: normalize(F, vec_mat(F, v, m))) for m in mats]
    return _prune(sorted(set(gens), key=lambda g: g.images))


def _prune(gens: list[Permutation]) -> list[Permutation]:
    """Keep only generators that enlarge the group generated so far."""
    from .perm import PermutationGroup

    kept: list[Permutation] = []
    order = 1
    for g in gens:
        trial = PermutationGroup(kept + [g]).order
        if trial > order:
            kept.append(g)
            order = trial
    return kept


def suzuki_ovoid(q: int = 8) -> list[Permutation]:
    """Sz(q) on the q^2 + 1 points of its ovoid in PG(3, q), q = 2^(2m+1)."""
    F = GF(q)
    m = (F.k - 1) // 2
    theta = lambda a: F.power(a, 2 ** (m + 1))  # noqa: E731
    sq = lambda a: F.mul(a, a)  # noqa: E731

    def unipotent(a: int, b: int) -> Matrix:
        ta = theta(a)
        last0 = F.add(F.add(F.mul(sq(a), ta), F.mul(a, b)), theta(b))
        last1 = F.add(F.mul(a, ta), b)
        return ((1, 0, 0, 0), (a, 1, 0, 0), (b, ta, 1, 0), (last0, last1, a, 1))

    gens_m = [unipotent(1, 0), unipotent(0, 1), unipotent(F.primitive, 0)]
    # the images of (0,0,0,1) under the whole unipotent group; the three
    # generators alone generate a proper subgroup
    orbit = {normalize(F, vec_mat(F, (0, 0, 0, 1), unipotent(a, b))) for a in F.elements() for b in F.elements()}
    pts = sorted(orbit | {(1, 0, 0, 0)})
    gens = [action(pts, lambda v, g=g: normalize(F, vec_mat(F, v, g))) for g in gens_m]
    gens.append(action(pts, lambda v: normalize(F, tuple(reversed(v)))))
    return gens


def symmetric(n: int) -> list[Permutation]:
    cyc = Permutation.from_cycles([tuple(range(1, n + 1))], n)
    return [cyc, Permutation.from_cycles([(1, 2)], n)]


def alternating(n: int) -> list[Permutation]:
    if n < 3:
        raise ValueError("alternating(n) needs n >= 3")
    if n == 3:
        return [Permutation.from_cycles([(1, 2, 3)], 3)]
    # (1,2,...,n) is even for odd n; use (1..n-1) for even n, plus (n-2,n-1,n)
    long = tuple(range(1, n + 1)) if n % 2 else tuple(range(1, n))
    return [Permutation.from_cycles([long], n), Permutation.from_cycles([(n - 2, n - 1, n)], n)]


M22 = (
    "(1,13)(2,8)(3,16)(4,12)(6,22)(7,17)(9,10)(11,14)",
    "(1,22,3,21)(2,18,4,13)(5,12)(6,11,7,15)(8,14,20,10)(17,19)",
)
