from __future__ import annotations

import itertools
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_classes, closure
from pconstant import _backend, _pykernels
from pconstant.perm import (
    BoundExceeded,
    InvalidPermutation,
    Permutation,
    PermutationGroup,
    conjugacy_classes,
    enumerate_group,
    power_map,
)


def perm(cycles, n):
    return Permutation.from_cycles(cycles, n)


def test_permutation_basics():
    a = perm([(1, 2, 3)], 3)
    b = perm([(1, 2)], 3)
    # left to right: apply a, then b
    assert (a * b).images == tuple(b.images[i] for i in a.images)
    assert a ** 3 == Permutation.identity(3)
    assert a.inverse() == a ** -1 == a ** 2
    assert str(a) == "(1,2,3)" and str(Permutation.identity(4)) == "()"
    assert perm([(1, 2), (3, 4, 5)], 6).order() == 6
    assert perm([(1, 2), (3, 4, 5)], 6).cycle_type() == (3, 2, 1)


def test_invalid_permutations():
    with pytest.raises(InvalidPermutation):
        Permutation([0, 0, 1])
    with pytest.raises(InvalidPermutation):
        perm([(1, 4)], 3)
    with pytest.raises(InvalidPermutation):
        perm([(1, 2), (2, 3)], 3)
    with pytest.raises(InvalidPermutation):
        PermutationGroup([perm([(1, 2)], 3), perm([(1, 2)], 4)])


def test_enumeration_examples():
    G = enumerate_group([perm([(1, 2, 3, 4, 5)], 5), perm([(3, 4, 5)], 5)])
    assert G.order == 60
    assert PermutationGroup([Permutation.identity(4)]).order == 1
    assert PermutationGroup([], degree=3).order == 1
    with pytest.raises(BoundExceeded) as info:
        PermutationGroup([perm([(1, 2, 3, 4, 5, 6)], 6), perm([(1, 2)], 6)], bound=100)
    assert info.value.bound == 100


def test_bound_from_environment(monkeypatch):
    monkeypatch.setenv("PCONST_BOUND", "50")
    with pytest.raises(BoundExceeded):
        PermutationGroup([perm([(1, 2, 3, 4, 5)], 5), perm([(3, 4, 5)], 5)])


def test_class_examples():
    G = PermutationGroup([perm([(1, 2, 3, 4, 5)], 5), perm([(3, 4, 5)], 5)])
    assert [c.size for c in conjugacy_classes(G)] == [1, 15, 20, 12, 12]
    S3 = PermutationGroup([perm([(1, 2, 3)], 3), perm([(1, 2)], 3)])
    assert [c.size for c in S3.conjugacy_classes] == [1, 3, 2]


def test_power_map_examples():
    G = PermutationGroup([perm([(1, 2, 3, 4, 5)], 5), perm([(3, 4, 5)], 5)])
    k = len(G.conjugacy_classes)
    assert power_map(G, None, 1) == list(range(k))
    assert power_map(G, None, 2)[3:] == [4, 3]
    assert power_map(G, None, 30) == [0] * k


def _random_gens(data, n, count):
    return [Permutation(data.draw(st.permutations(range(n)))) for _ in range(count)]


@settings(max_examples=40, deadline=None)
@given(st.data(), st.integers(2, 7), st.integers(1, 3))
def test_group_matches_brute_force(data, n, count):
    gens = _random_gens(data, n, count)
    G = PermutationGroup(gens)
    elems = {tuple(row) for row in G.elements.tolist()}
    assert elems == closure([g.images for g in gens])
    assert tuple(G.elements[0]) == tuple(range(n))
    brute = brute_classes(elems)
    assert sorted(len(c) for c in brute) == sorted(c.size for c in G.conjugacy_classes)
    for c in G.conjugacy_classes:
        # representatives are lexicographically least in their class
        cls = next(b for b in brute if c.representative.images in b)
        assert c.representative.images == min(cls)
        assert c.element_order == c.representative.order()
    keys = [(c.element_order, c.size, c.representative.images) for c in G.conjugacy_classes]
    assert keys == sorted(keys)
    for i in range(0, G.order, max(1, G.order // 10)):
        x = G.element(i)
        assert G.index(x) == i
        assert G.conjugacy_classes[G.class_of[i]].representative.cycle_type() == x.cycle_type()


@settings(max_examples=30, deadline=None)
@given(st.data(), st.integers(2, 9), st.integers(1, 3))
def test_backends_agree(data, n, count):
    gens = np.array([data.draw(st.permutations(range(n))) for _ in range(count)], dtype=np.uint8)
    pure = _pykernels.closure(gens, 10**6)
    fast = _backend.closure(gens, 10**6)
    assert np.array_equal(pure, fast)
    a = np.array(data.draw(st.lists(st.integers(0, 4), min_size=5, max_size=5)), dtype=np.int64)
    b = np.array(data.draw(st.lists(st.integers(0, 4), min_size=5, max_size=5)), dtype=np.int64)
    assert np.array_equal(_pykernels.pair_counts(a, b, 5), _backend.pair_counts(a, b, 5))


def test_backend_overflow_agrees():
    gens = np.array([[1, 2, 3, 4, 5, 0], [1, 0, 2, 3, 4, 5]], dtype=np.uint8)
    for mod in (_pykernels, _backend):
        with pytest.raises(_pykernels.ClosureOverflow):
            mod.closure(gens, 100)


def test_pure_fallback_selected_by_environment():
    env = dict(os.environ, PCONST_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from pconstant import _backend; print(_backend.NAME)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_compiled_backend_present():
    # the build ships the extension; the pure path is only a fallback
    assert _backend.NAME in ("cython", "python")
    if os.environ.get("PCONST_PURE"):
        assert _backend.NAME == "python"


def test_sym4_brute_force():
    gens = [perm([(1, 2, 3, 4)], 4), perm([(1, 2)], 4)]
    G = PermutationGroup(gens)
    assert G.order == 24
    assert {tuple(r) for r in G.elements.tolist()} == set(itertools.permutations(range(4)))
    assert G.exponent == 12
