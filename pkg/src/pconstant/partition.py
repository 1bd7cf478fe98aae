"""Partition combinatorics: conjugates, hooks, rim hooks and p-cores.

Partitions are tuples of weakly decreasing positive integers. Rim hooks
and cores are computed on beta-sets (first-column hook lengths), where
removing a rim hook of length ``l`` is sliding one bead down by ``l``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive parts; ``Partition()`` is empty."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self) + "]"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``[5,2,1,1,1]``; ``1^3`` exponent shorthand is accepted."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        elif body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        parts: list[int] = []
        for token in body.split(","):
            token = token.strip()
            if not token:
                continue
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if m is None:
                raise ValueError(f"bad partition token {token!r} in {text!r}")
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        return cls(parts)


@dataclass(frozen=True)
class RimHook:
    length: int
    leg: int
    resulting: Partition


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x > j) for j in range(lam[0]))


def hook_lengths(lam: Iterable[int]) -> list[list[int]]:
    lam = tuple(lam)
    cols = conjugate(lam)
    return [[lam[i] - j + cols[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def principal_hooks(lam: Iterable[int]) -> tuple[int, ...]:
    """Hook lengths of the diagonal cells."""
    hooks = hook_lengths(lam)
    return tuple(hooks[i][i] for i in range(len(hooks)) if i < len(hooks[i]))


def degree(lam: Iterable[int]) -> int:
    """Degree of the Sym_n irreducible labelled by ``lam`` (hook length formula)."""
    lam = tuple(lam)
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return math.factorial(sum(lam)) // prod


def is_self_conjugate(lam: Iterable[int]) -> bool:
    lam = tuple(lam)
    return lam == tuple(conjugate(lam))


# beta-set helpers --------------------------------------------------------

def to_beta(lam: tuple[int, ...], beads: int | None = None) -> tuple[int, ...]:
    """Beta-set of ``lam`` with the given number of beads, increasing."""
    k = len(lam) if beads is None else beads
    if k < len(lam):
        raise ValueError("need at least as many beads as parts")
    padded = tuple(lam) + (0,) * (k - len(lam))
    return tuple(sorted(padded[i] + k - 1 - i for i in range(k)))


def from_beta(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    return Partition(x for x in (beta[i] - (k - 1 - i) for i in range(k)) if x > 0)


def removable_rim_hooks(lam: Iterable[int], length: int) -> list[RimHook]:
    """All rim hooks of exactly ``length`` cells, top-most starting row first."""
    if length < 1:
        raise ValueError("rim hook length must be positive")
    lam = tuple(lam)
    beta = to_beta(lam)
    present = set(beta)
    hooks = []
    for b in sorted(beta, reverse=True):
        target = b - length
        if target < 0 or target in present:
            continue
        leg = sum(1 for c in beta if target < c < b)
        new_beta = (present - {b}) | {target}
        hooks.append(RimHook(length, leg, from_beta(new_beta)))
    return hooks


@lru_cache(maxsize=None)
def _core(lam: tuple[int, ...], p: int) -> Partition:
    k = len(lam)
    # pad to a multiple of p beads so runner positions are canonical
    k += (-k) % p
    beta = to_beta(lam, k)
    runners = [0] * p
    for b in beta:
        runners[b % p] += 1
    slid = [r + p * level for r in range(p) for level in range(runners[r])]
    return from_beta(slid)


def p_core(lam: Iterable[int], p: int) -> Partition:
    """Remove all rim hooks of length ``p`` (abacus slide; order-independent)."""
    if p < 2:
        raise ValueError("p must be at least 2")
    return _core(tuple(lam), p)


def p_weight(lam: Iterable[int], p: int) -> int:
    lam = tuple(lam)
    return (sum(lam) - sum(p_core(lam, p))) // p


def principal_block_partitions(n: int, p: int) -> list[Partition]:
    """Partitions of ``n`` sharing the p-core of the trivial partition ``(n)``."""
    if p > n:
        raise ValueError(f"need p <= n, got p={p}, n={n}")
    target = p_core((n,), p)
    return [lam for lam in partitions(n) if p_core(lam, p) == target]


def padic_valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def sym_defect(lam: Iterable[int], p: int) -> int:
    lam = tuple(lam)
    n = sum(lam)
    return padic_valuation(math.factorial(n), p) - padic_valuation(degree(lam), p)
