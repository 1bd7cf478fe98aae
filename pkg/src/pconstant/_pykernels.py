"""Pure-Python kernels; the reference for the compiled ``_kernels`` module."""

from __future__ import annotations

import numpy as np


class ClosureOverflow(Exception):
    def __init__(self, found: int):
        super().__init__(found)
        self.found = found


def closure(gens: np.ndarray, bound: int) -> np.ndarray:
    """Breadth-first closure of ``gens`` (rows of images, 0-based, uint8).

    Element ``i`` is expanded by right multiplication with each generator
    in turn; new products are appended, so the identity comes first.
    """
    gens = np.ascontiguousarray(gens, dtype=np.uint8)
    n = gens.shape[1]
    tables = [bytes(g) + bytes(range(n, 256)) for g in gens]
    ident = bytes(range(n))
    seen = {ident: 0}
    elems = [ident]
    i = 0
    while i < len(elems):
        x = elems[i]
        for t in tables:
            y = x.translate(t)
            if y not in seen:
                seen[y] = len(elems)
                elems.append(y)
                if len(elems) > bound:
                    raise ClosureOverflow(len(elems))
        i += 1
    return np.frombuffer(b"".join(elems), dtype=np.uint8).reshape(len(elems), n).copy()


def pair_counts(first: np.ndarray, second: np.ndarray, k: int) -> np.ndarray:
    """Matrix ``out[a, b] = #{w : first[w] == a and second[w] == b}``."""
    flat = np.bincount(first.astype(np.int64) * k + second, minlength=k * k)
    return flat.reshape(k, k)
