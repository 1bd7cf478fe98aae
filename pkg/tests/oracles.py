"""Brute-force reference computations, independent of the library code paths."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache


def cells(lam) -> set[tuple[int, int]]:
    return {(i, j) for i, row in enumerate(lam) for j in range(row)}


def shape_from_cells(cs) -> tuple[int, ...]:
    rows: dict[int, int] = {}
    for i, _ in cs:
        rows[i] = rows.get(i, 0) + 1
    return tuple(rows[i] for i in sorted(rows))


def all_partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in all_partitions(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def syt_count(lam: tuple[int, ...]) -> int:
    """Standard Young tableaux, by removing the cell holding the largest entry."""
    if sum(lam) == 0:
        return 1
    total = 0
    for i, row in enumerate(lam):
        if row and (i + 1 == len(lam) or lam[i + 1] < row):
            smaller = list(lam)
            smaller[i] -= 1
            total += syt_count(tuple(x for x in smaller if x))
    return total


def brute_rim_hooks(lam, length: int) -> list[tuple[int, tuple[int, ...]]]:
    """(leg, remaining shape) for every border strip of the given length."""
    lam = tuple(lam)
    out = []
    for mu in all_partitions(sum(lam) - length):
        if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
            continue
        skew = cells(lam) - cells(mu)
        if not skew:
            continue
        # connected
        start = next(iter(skew))
        seen, stack = {start}, [start]
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in skew and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if seen != skew:
            continue
        if any({(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)} <= skew for i, j in skew):
            continue
        rows = {i for i, _ in skew}
        out.append((len(rows) - 1, mu))
    return sorted(out)


def all_cores(lam, p: int) -> set[tuple[int, ...]]:
    """Results of every sequence of p-rim-hook removals."""
    hooks = brute_rim_hooks(lam, p)
    if not hooks:
        return {tuple(lam)}
    out = set()
    for _, mu in hooks:
        out |= all_cores(mu, p)
    return out


def cycle_type(perm) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for s in range(len(perm)):
        if not seen[s]:
            k, x = 0, s
            while not seen[x]:
                seen[x] = True
                x = perm[x]
                k += 1
            lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def compose(x, y):
    """x first, then y."""
    return tuple(y[i] for i in x)


def inverse(x):
    inv = [0] * len(x)
    for i, j in enumerate(x):
        inv[j] = i
    return tuple(inv)


def sign(perm) -> int:
    ct = cycle_type(perm)
    return (-1) ** (len(perm) - len(ct))


def brute_classes(elements) -> list[frozenset]:
    """Conjugacy classes of a small group given by its full element list."""
    elements = list(elements)
    todo = set(elements)
    out = []
    while todo:
        x = todo.pop()
        cls = {compose(compose(inverse(g), x), g) for g in elements}
        todo -= cls
        out.append(frozenset(cls))
    return out


def alternating_elements(n: int):
    return [p for p in itertools.permutations(range(n)) if sign(p) == 1]


def closure(gens) -> set:
    """Group generated by permutation tuples, by naive breadth-first search."""
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


# -- Young permutation characters --------------------------------------------------

def kostka(lam, mu) -> int:
    """Semistandard tableaux of shape lam and content mu, by brute force."""
    lam, mu = tuple(lam), tuple(mu)

    def fill(shape_so_far, k):
        if k == len(mu):
            return 1 if shape_so_far == lam else 0
        total = 0
        # add a horizontal strip of mu[k] cells
        for new in all_partitions(sum(shape_so_far) + mu[k]):
            if len(new) > len(lam) or any(a > b for a, b in zip(new, lam)):
                continue
            old = shape_so_far + (0,) * (len(new) - len(shape_so_far))
            if len(old) > len(new):
                continue
            if all(old[i] <= new[i] and (i == 0 or new[i] <= old[i - 1]) for i in range(len(new))):
                total += fill(new, k + 1)
        return total

    return fill((), 0)


def young_permutation_character(mu, cycle) -> int:
    """Fixed points of a permutation of cycle type ``cycle`` on tabloids of shape mu."""
    # number of ways to distribute the cycles into rows of sizes mu
    cycle = list(cycle)

    def count(i, remaining):
        if i == len(cycle):
            return 1 if all(r == 0 for r in remaining) else 0
        total = 0
        for r in range(len(remaining)):
            if remaining[r] >= cycle[i]:
                remaining[r] -= cycle[i]
                total += count(i + 1, remaining)
                remaining[r] += cycle[i]
        return total

    return count(0, list(mu))


def sym_class_size(mu) -> int:
    n = sum(mu)
    z = 1
    for k in set(mu):
        m = mu.count(k)
        z *= k**m * math.factorial(m)
    return math.factorial(n) // z


def align_to_oracle(T, G, oracle, alternating: bool = False):
    """Reorder the columns of a table built from G to the class order of an MN or split-formula table."""
    from pconstant.altchar import standard_representative
    from pconstant.perm import Permutation

    keys = []
    for j, c in enumerate(T.classes):
        x = c.representative
        mu = x.cycle_type()
        tag = None
        if alternating:
            odd_distinct = all(m % 2 for m in mu) and len(set(mu)) == len(mu)
            if odd_distinct:
                std = Permutation(standard_representative(mu))
                tag = "+" if G.class_of[G.index(std)] == G.class_of[G.index(x)] else "-"
            else:
                tag = "single"
        keys.append((tuple(mu), tag))
    target = []
    for c in oracle.classes:
        rep = c.representative
        if alternating:
            target.append((tuple(rep.mu), rep.tag))
        else:
            target.append((tuple(rep), None))
    perm = [keys.index(k) for k in target]
    return T.permute_columns(perm)
