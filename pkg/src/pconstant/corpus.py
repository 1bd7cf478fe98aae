"""The shipped test groups: generator fixtures plus what is known about each group.

Generator files live in ``pconstant/data`` and are regenerated from
:mod:`pconstant.constructions` by :func:`write_fixtures`; tests check that
the two agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from . import constructions as C
from .dixon import dixon_table
from .formats import GeneratorDocument, parse_generators, serialize_generators
from .perm import Permutation, PermutationGroup
from .table import CharacterTable


@dataclass(frozen=True)
class LieStructure:
    """One way of viewing the group as a finite group of Lie type."""

    family: str  # as accepted by LieFamily.parse
    q: int  # the family parameter (q^2 for Suzuki/Ree)
    characteristic: int
    simply_connected: bool  # the group is the simply connected form itself


@dataclass(frozen=True)
class CorpusGroup:
    key: str
    name: str
    order: int
    lie: tuple[LieStructure, ...] = ()
    slow: bool = False

    @property
    def filename(self) -> str:
        return f"{self.key}.gens"

    def structure_in(self, p: int) -> LieStructure | None:
        """The Lie structure with defining characteristic p, if any."""
        for s in self.lie:
            if s.characteristic == p:
                return s
        return None


def _l(family: str, q: int, char: int, sc: bool = True) -> LieStructure:
    return LieStructure(family, q, char, sc)


def _sl2(q: int) -> CorpusGroup:
    p = C.GF(q).p
    order = q * (q * q - 1)
    return CorpusGroup(f"sl2_{q}", f"SL2({q})", order, (_l("A1", q, p, True),))


def _psl2(q: int) -> CorpusGroup:
    p = C.GF(q).p
    order = q * (q * q - 1) // (2 if q % 2 else 1)
    lie = [_l("A1", q, p, q % 2 == 0)]
    # exceptional isomorphisms: PSL2(4) = PSL2(5) = Alt5, PSL2(9) = Alt6
    if q == 4:
        lie.append(_l("A1", 5, 5, False))
    if q == 5:
        lie.append(_l("A1", 4, 2, True))
    return CorpusGroup(f"psl2_{q}", f"PSL2({q})", order, tuple(lie))


GROUPS: dict[str, CorpusGroup] = {}
for _g in (
    CorpusGroup("sym5", "Sym5", 120),
    CorpusGroup("alt5", "Alt5", 60, (_l("A1", 4, 2, True), _l("A1", 5, 5, False))),
    CorpusGroup("alt6", "Alt6", 360, (_l("A1", 9, 3, False),)),
    CorpusGroup("alt7", "Alt7", 2520),
    CorpusGroup("sym6", "Sym6", 720),
    CorpusGroup("alt8", "Alt8", 20160, (_l("A3", 2, 2, True),)),
    CorpusGroup("sym8", "Sym8", 40320),
    *(_sl2(q) for q in (4, 5, 7, 8, 9, 11, 13)),
    *(_psl2(q) for q in (5, 7, 9, 11, 13)),
    CorpusGroup("psu3_3", "PSU3(3)", 6048, (_l("2A2", 3, 3, True),)),
    CorpusGroup("sz8", "Sz(8)", 29120, (_l("2B2", 8, 2, True),)),
    CorpusGroup("sl4_2", "SL4(2)", 20160, (_l("A3", 2, 2, True),)),
    CorpusGroup("m22", "M22", 443520, slow=True),
    CorpusGroup("psl3_7", "PSL3(7)", 1876896, (_l("A2", 7, 7, False),), slow=True),
):
    GROUPS[_g.key] = _g

# groups of Lie type checked in their defining characteristic
LIE_CORPUS = [k for k in GROUPS if k.startswith(("sl2_", "psl2_")) or k in ("psu3_3", "sz8", "sl4_2")]


def construct(key: str) -> list[Permutation]:
    """Generators built from scratch (the source of the shipped files)."""
    if key.startswith("sym"):
        return C.symmetric(int(key[3:]))
    if key.startswith("alt"):
        return C.alternating(int(key[3:]))
    if key.startswith("sl2_"):
        return C.sl2_vectors(int(key[4:]))
    if key.startswith("psl2_"):
        return C.psl2_projective(int(key[5:]))
    if key == "psu3_3":
        return C.psu3_isotropic(3)
    if key == "sz8":
        return C.suzuki_ovoid(8)
    if key == "sl4_2":
        return C.sl_vectors_gf2(4)
    if key == "psl3_7":
        return C.psl3_projective(7)
    if key == "m22":
        return [Permutation.from_cycles(_cycles(s), 22) for s in C.M22]
    raise KeyError(key)


def _cycles(text: str) -> list[tuple[int, ...]]:
    return [tuple(int(x) for x in c.split(",")) for c in text.strip("()").split(")(")]


def fixture_text(key: str) -> str:
    g = GROUPS[key]
    gens = construct(key)
    return serialize_generators(GeneratorDocument(gens[0].degree, gens, g.name, g.order))


def write_fixtures(directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for key in GROUPS:
        (directory / GROUPS[key].filename).write_text(fixture_text(key))


def read_fixture(key: str) -> GeneratorDocument:
    text = resources.files("pconstant").joinpath("data", GROUPS[key].filename).read_text()
    return parse_generators(text, source=GROUPS[key].filename)


def fixture_path(key: str) -> Path:
    return Path(str(resources.files("pconstant").joinpath("data", GROUPS[key].filename)))


@lru_cache(maxsize=None)
def group(key: str) -> PermutationGroup:
    doc = read_fixture(key)
    return PermutationGroup(doc.generators, degree=doc.degree)


@lru_cache(maxsize=None)
def table(key: str, seed: int = 0) -> CharacterTable:
    """Dixon table of a corpus group, built from the shipped generators."""
    return dixon_table(group(key), seed=seed, name=GROUPS[key].name)


if __name__ == "__main__":  # pragma: no cover
    write_fixtures(Path(__file__).with_name("data"))
