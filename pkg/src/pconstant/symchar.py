"""Character theory of the symmetric groups via the Murnaghan-Nakayama rule."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .partition import Partition, degree, partitions, sym_defect
from .table import CharacterTable, ClassInfo

DEFAULT_BOUND = 20


class BoundExceeded(ValueError):
    pass


def _mn(beta: tuple[int, ...], mu: tuple[int, ...], cache: dict) -> int:
    if not mu:
        return 1
    key = (beta, mu)
    hit = cache.get(key)
    if hit is not None:
        return hit
    length, rest = mu[0], mu[1:]
    present = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        target = b - length
        if target < 0 or target in present:
            continue
        # beads strictly between target and b give the leg length
        leg = 0
        for c in beta:
            if target < c < b:
                leg += 1
        new = tuple(sorted(beta[:idx] + beta[idx + 1:] + (target,)))
        val = _mn(_normalize(new), rest, cache)
        total += -val if leg & 1 else val
    cache[key] = total
    return total


def _normalize(beta: tuple[int, ...]) -> tuple[int, ...]:
    # drop leading beads 0,1,...,k-1 (empty rows) so equal partitions share a key
    k = 0
    while k < len(beta) and beta[k] == k:
        k += 1
    return tuple(b - k for b in beta[k:])


def _beta(lam: tuple[int, ...]) -> tuple[int, ...]:
    k = len(lam)
    return tuple(sorted(lam[i] + k - 1 - i for i in range(k)))


def mn_value(lam, mu, cache: dict | None = None) -> int:
    """chi_lam evaluated at the class of cycle type ``mu``."""
    lam = tuple(lam)
    mu = tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(_beta(lam), mu, {} if cache is None else cache)


def cycle_type_order(mu) -> int:
    return math.lcm(*mu) if mu else 1


def cycle_type_sign(mu) -> int:
    mu = tuple(mu)
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def centralizer_size(mu) -> int:
    z = 1
    for part, mult in Counter(mu).items():
        z *= part**mult * math.factorial(mult)
    return z


def class_size(mu) -> int:
    return math.factorial(sum(mu)) // centralizer_size(mu)


def is_p_singular(mu, p: int) -> bool:
    return any(part % p == 0 for part in mu)


def power_cycle_type(mu, t: int) -> Partition:
    """Cycle type of the t-th power of a permutation of type ``mu``."""
    parts = []
    for part in mu:
        g = math.gcd(part, t)
        parts.extend([part // g] * g)
    return Partition(sorted(parts, reverse=True))


def class_name(mu) -> str:
    return "".join(str(x) if x < 10 else f"({x})" for x in mu) if mu else "0"


def sym_classes(n: int) -> list[Partition]:
    """Cycle types of Sym_n, identity first (increasing lexicographic)."""
    return sorted(partitions(n))


def sym_character_table(n: int, bound: int = DEFAULT_BOUND) -> CharacterTable:
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the configured bound {bound}")
    mus = sym_classes(n)
    lams = sorted(partitions(n))
    cache: dict = {}
    rows = [[_mn(_beta(tuple(lam)), tuple(mu), cache) for mu in mus] for lam in lams]
    index = {mu: i for i, mu in enumerate(mus)}
    classes = [ClassInfo(str(mu), class_size(mu), cycle_type_order(mu), mu) for mu in mus]
    exponent = math.lcm(*(c.order for c in classes))
    pmaps = {
        t: [index[power_cycle_type(mu, t)] for mu in mus]
        for t in _prime_divisors(exponent)
    }
    return CharacterTable(f"Sym{n}", math.factorial(n), classes, rows, pmaps, [str(lam) for lam in lams])


def _prime_divisors(x: int) -> list[int]:
    out, d = [], 2
    while d * d <= x:
        if x % d == 0:
            out.append(d)
            while x % d == 0:
                x //= d
        d += 1
    if x > 1:
        out.append(x)
    return out


@dataclass(frozen=True)
class SymClassifierEntry:
    partition: Partition
    degree: int
    constant: int | None  # None: not constant on the p-singular classes
    defect: int

    @property
    def is_constant(self) -> bool:
        return self.constant is not None


class NoSingularClasses(ValueError):
    pass


def classify_sym(n: int, p: int, bound: int = DEFAULT_BOUND) -> list[SymClassifierEntry]:
    """Verdict for every chi_lam of Sym_n on the p-singular classes."""
    if p > n:
        raise NoSingularClasses(f"Sym{n} has no {p}-singular elements")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the configured bound {bound}")
    singular = [mu for mu in partitions(n) if is_p_singular(mu, p)]
    cache: dict = {}
    entries = []
    for lam in sorted(partitions(n)):
        beta = _beta(tuple(lam))
        values = {_mn(beta, tuple(mu), cache) for mu in singular}
        const = values.pop() if len(values) == 1 else None
        entries.append(SymClassifierEntry(lam, degree(lam), const, sym_defect(lam, p)))
    return entries


def p_constant_sym(n: int, p: int, bound: int = DEFAULT_BOUND) -> list[SymClassifierEntry]:
    """The p-constant irreducible characters of Sym_n, with constant and defect."""
    return [e for e in classify_sym(n, p, bound) if e.is_constant]
