from __future__ import annotations

import pytest

from pconstant import corpus
from pconstant.formats import parse_generators
from pconstant.perm import PermutationGroup


@pytest.mark.parametrize("key", sorted(corpus.GROUPS))
def test_shipped_fixture_matches_construction(key):
    assert corpus.fixture_path(key).read_text() == corpus.fixture_text(key)
    doc = corpus.read_fixture(key)
    assert doc.generators == corpus.construct(key)


@pytest.mark.parametrize("key", [k for k, g in corpus.GROUPS.items() if not g.slow])
def test_orders(key):
    assert corpus.group(key).order == corpus.GROUPS[key].order


@pytest.mark.slow
@pytest.mark.parametrize("key", [k for k, g in corpus.GROUPS.items() if g.slow])
def test_large_orders(key):
    G = PermutationGroup(parse_generators(corpus.fixture_path(key).read_text()).generators)
    assert G.order == corpus.GROUPS[key].order


def test_known_orders():
    assert corpus.GROUPS["m22"].order == 443520 == 2**7 * 3**2 * 5 * 7 * 11
    assert corpus.GROUPS["psl3_7"].order == 1876896
    assert corpus.GROUPS["sz8"].order == 29120
    assert corpus.GROUPS["sl4_2"].order == 20160
