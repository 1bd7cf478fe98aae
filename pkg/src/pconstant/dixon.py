"""Character tables of permutation groups by the Dixon-Schneider method.

Class matrices are reduced modulo a prime ``l`` with ``l = 1 mod exponent``
and ``l > 2 sqrt|G|``. Their common eigenvectors are the central
characters mod ``l``; degrees follow from the norm relation, and each
value is lifted to a sum of roots of unity by a discrete Fourier sum over
the powers of a class representative.
"""

from __future__ import annotations

import math

import numpy as np
from sympy import isprime, primitive_root, sqrt_mod
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from . import _backend
from .cyclotomic import Cyclotomic
from .perm import PermutationGroup
from .table import CharacterTable, ClassInfo, OrthogonalityError

MAX_CLASSES = 200
MAX_ATTEMPTS = 64
_INT64_MAX = 2**63 - 1


class LiftingFailure(RuntimeError):
    """Internal inconsistency while building a table; indicates a bug."""


def dixon_prime(exponent: int, order: int) -> int:
    """Least prime l with l = 1 (mod exponent) and l > 2*sqrt(order)."""
    lo = math.isqrt(4 * order) + 1
    l = lo + (1 - lo) % exponent
    while not isprime(l):
        l += exponent
    return l


def _matmul_mod(a: np.ndarray, b: np.ndarray, l: int) -> np.ndarray:
    inner = a.shape[-1]
    if inner * (l - 1) ** 2 > _INT64_MAX:
        # exact but slow path; never silently wrap
        return np.asarray(a.astype(object) @ b.astype(object) % l, dtype=np.int64)
    return (a @ b) % l


def _rref(m: np.ndarray, l: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form modulo l and the pivot columns."""
    m = m.copy() % l
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if len(nz) == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, l) % l
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % l
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _nullspace(m: np.ndarray, l: int) -> np.ndarray:
    """Columns spanning the right kernel of ``m`` modulo l."""
    red, piv = _rref(m, l)
    n = m.shape[1]
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, p in enumerate(piv):
            basis[p, j] = (-red[i, f]) % l
    return basis


def _charpoly(b: np.ndarray, l: int) -> list[int]:
    """Characteristic polynomial (leading coefficient first) by Faddeev-LeVerrier."""
    d = b.shape[0]
    coeffs = [1]
    m = np.zeros_like(b)
    ident = np.eye(d, dtype=np.int64)
    for k in range(1, d + 1):
        m = (_matmul_mod(b, m, l) + coeffs[-1] * ident) % l
        tr = int(np.trace(_matmul_mod(b, m, l)) % l)
        coeffs.append(-tr * pow(k, -1, l) % l)
    return coeffs


def _roots(coeffs: list[int], l: int) -> list[int]:
    _, factors = gf_factor([ZZ(c) for c in coeffs], l, ZZ)
    roots = []
    for f, mult in factors:
        if len(f) != 2:
            raise LiftingFailure("characteristic polynomial does not split over F_l")
        roots.append(int(-f[1] * pow(int(f[0]), -1, l) % l))
    return roots


def structure_constants(G: PermutationGroup) -> np.ndarray:
    """``a[i, j, k] = #{w : class(z_k w) = i, class(w^-1) = j}`` for fixed z_k."""
    classes = G.conjugacy_classes
    k = len(classes)
    class_of = G.class_of
    inv = np.array(G.inverse_classes)
    inv_of_w = inv[class_of]
    base = G.base
    a = np.zeros((k, k, k), dtype=np.int64)
    for kk, c in enumerate(classes):
        z = np.array(c.representative.images)
        # (z * w)[b] = w[z[b]]
        zw = G.index_from_base(G.elements[:, z[base]]) if base else np.zeros(G.order, dtype=np.int64)
        a[:, :, kk] = _backend.pair_counts(class_of[zw], inv_of_w, k)
    return a


def _split_spaces(mats: np.ndarray, l: int, seed: int) -> list[np.ndarray]:
    """Common eigenvectors (one per character) of the matrices ``mats[i]``."""
    k = mats.shape[1]
    done: list[np.ndarray] = []
    todo = [(np.eye(k, dtype=np.int64), list(range(k)))]
    sub = 0
    while todo:
        basis, piv = todo.pop()
        d = basis.shape[1]
        if d == 1:
            done.append(basis[:, 0])
            continue
        for attempt in range(MAX_ATTEMPTS):
            rng = np.random.default_rng([seed, sub, attempt])
            c = rng.integers(0, l, size=mats.shape[0], dtype=np.int64)
            combo = np.zeros((k, k), dtype=np.int64)
            for ci, m in zip(c, mats):
                combo = (combo + int(ci) * m) % l
            image = _matmul_mod(combo, basis, l)
            restricted = image[piv, :]
            roots = _roots(_charpoly(restricted, l), l)
            if len(set(roots)) > 1:
                break
        else:
            raise LiftingFailure(f"could not split a {d}-dimensional eigenspace after {MAX_ATTEMPTS} attempts")
        sub += 1
        total = 0
        for lam in sorted(set(roots)):
            shifted = (restricted - lam * np.eye(d, dtype=np.int64)) % l
            null = _nullspace(shifted, l)
            total += null.shape[1]
            vecs = _matmul_mod(basis, null, l)
            red, newpiv = _rref(vecs.T, l)
            todo.append((red.T.copy(), newpiv))
        if total != d:
            raise LiftingFailure("eigenspaces do not fill the invariant subspace")
    return done


def _class_names(classes) -> list[str]:
    counts: dict[int, int] = {}
    names = []
    for c in classes:
        i = counts.get(c.element_order, 0)
        counts[c.element_order] = i + 1
        letters = ""
        i += 1
        while i:
            i, r = divmod(i - 1, 26)
            letters = chr(ord("a") + r) + letters
        names.append(f"{c.element_order}{letters}")
    return names


def dixon_table(G: PermutationGroup, seed: int = 0, name: str | None = None) -> CharacterTable:
    classes = G.conjugacy_classes
    k = len(classes)
    if k > MAX_CLASSES:
        raise ValueError(f"{k} classes exceeds the supported {MAX_CLASSES}")
    order = G.order
    exponent = G.exponent
    l = dixon_prime(exponent, order)
    sizes = [c.size for c in classes]

    a = structure_constants(G) % l
    # (M_i)_{jk} = a[i, j, k]
    vectors = _split_spaces(a, l, seed)
    if len(vectors) != k:
        raise LiftingFailure(f"found {len(vectors)} central characters for {k} classes")

    inv = G.inverse_classes
    # powers of every representative, for the Fourier lift
    power_classes = []
    for c in classes:
        rep = np.array(c.representative.images, dtype=np.int64)
        cur = np.arange(G.degree, dtype=np.int64)
        rows = []
        for _ in range(c.element_order):
            rows.append(cur.copy())
            cur = rep[cur]
        rows = np.array(rows, dtype=np.uint8)
        power_classes.append(G.class_of[G.index_from_base(rows[:, G.base])] if G.base else np.zeros(len(rows), int))

    zeta = pow(primitive_root(l), (l - 1) // exponent, l)
    rows_out = []
    for v in vectors:
        v = [int(x) for x in v]
        if v[0] == 0:
            raise LiftingFailure("central character vanishes on the identity class")
        s = pow(v[0], -1, l)
        v = [x * s % l for x in v]
        norm = sum(v[j] * v[inv[j]] * pow(sizes[j], -1, l) for j in range(k)) % l
        sq = order * pow(norm, -1, l) % l
        root = sqrt_mod(sq, l)
        if root is None:
            raise LiftingFailure("degree square is not a square mod l")
        deg = min(root, l - root)
        if deg == 0 or order % deg:
            raise LiftingFailure(f"lifted degree {deg} does not divide {order}")
        chi = [v[j] * deg * pow(sizes[j], -1, l) % l for j in range(k)]
        row = []
        for j, c in enumerate(classes):
            o = c.element_order
            z = pow(zeta, exponent // o, l)
            inv_o = pow(o, -1, l)
            terms = {}
            for e in range(o):
                m = sum(chi[int(power_classes[j][t])] * pow(z, (-e * t) % o, l) for t in range(o)) * inv_o % l
                if m > deg:
                    raise LiftingFailure(f"eigenvalue multiplicity {m} exceeds degree {deg}")
                if m:
                    terms[e] = m
            row.append(Cyclotomic.from_exponents(o, terms))
        rows_out.append(row)

    names = _class_names(classes)
    infos = [ClassInfo(nm, c.size, c.element_order, c.representative) for nm, c in zip(names, classes)]
    primes = [p for p in range(2, exponent + 1) if exponent % p == 0 and isprime(p)]
    pmaps = {p: G.power_map(p) for p in primes}
    table = CharacterTable(name or f"G{order}", order, infos, rows_out, pmaps).canonical()
    try:
        table.check()
    except OrthogonalityError as exc:
        raise LiftingFailure(f"lifted table fails verification: {exc}") from exc
    return table
