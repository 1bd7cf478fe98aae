"""Named, parameterised checks of the classification results.

Each check returns a :class:`Verdict` whose ``evidence`` is plain JSON data
listing every row or family instance the check looked at.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from . import corpus
from .altchar import alt_character_table, row_partition
from .lieorders import LieFamily, expected, scan_families
from .partition import Partition, conjugate
from .pconst import (
    encode_value,
    p_constant_report,
    p_element_classes,
    sylow_is_cyclic,
    valuation,
)
from .symchar import classify_sym
from .table import CharacterTable

CLAIMS = (
    "thm-lie",
    "thm-trichotomy",
    "thm-alt",
    "prop-sym-defect0",
    "lemma-minus",
    "lemma-plus",
    "thm-steinberg-neighbors",
    "m22-exception",
    "psl37-remark",
)


class NoDefectZeroRow(ValueError):
    """No (or more than one) candidate Steinberg row in a supplied table."""


class UnknownClaim(KeyError):
    pass


@dataclass
class Verdict:
    claim: str
    passed: bool
    evidence: dict[str, Any] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"claim": self.claim, "passed": self.passed, "failures": self.failures, "evidence": self.evidence}


# -- Lie type in defining characteristic ----------------------------------------

# signs s for which degree |G|_p + s may be constant (with value s) on the unipotent classes
ALLOWED_SIGNS = {"A1": (1, -1), "A2": (-1,), "2A2": (1,), "2B2": (1,), "2G2": (1,)}
# Steinberg neighbours that occur as degrees at all
NEIGHBOURS = {1: ("A1", "2A2", "2B2", "2G2"), -1: ("A1", "A2", "B2", "C2", "G2")}


def _family_name(family: str | LieFamily | None) -> str | None:
    if family is None:
        return None
    return (LieFamily.parse(family) if isinstance(family, str) else family).name


def verify_lie(T: CharacterTable, p: int, p_part: int, family: str | LieFamily | None = None) -> Verdict:
    """Constant characters on the non-identity unipotent classes of a Lie-type group.

    Passing means: the Steinberg row (the unique defect-0 row) has degree
    ``p_part``, and the other nonlinear rows constant on the unipotent
    classes are exactly the rows of degree ``p_part + s`` for the signs s
    allowed for ``family``, each with constant value s.
    """
    unipotent = p_element_classes(T, p)
    report = p_constant_report(T, p, classes=unipotent)
    zero = [e for e in report.entries if e.defect == 0]
    if len(zero) != 1:
        raise NoDefectZeroRow(f"{T.name}: expected one defect-0 row at p={p}, found {len(zero)}")
    st = zero[0]
    signs = ALLOWED_SIGNS.get(_family_name(family), ())
    failures = []
    if st.degree != p_part:
        failures.append(f"defect-0 row {st.label} has degree {st.degree}, not {p_part}")
    rows = []
    for e in report.entries:
        if e.degree == 1 or e is st:
            continue
        s = e.degree - p_part
        if e.is_constant:
            rows.append({"label": e.label, "degree": e.degree, "constant": encode_value(e.constant)})
            if s not in signs or e.constant != s:
                failures.append(f"{e.label} (degree {e.degree}) is constant {encode_value(e.constant)} on unipotent classes")
        elif s in signs:
            failures.append(f"{e.label} has degree {e.degree} but is not constant on unipotent classes")
    evidence = {
        "group": T.name,
        "p": p,
        "p_part": p_part,
        "family": _family_name(family),
        "steinberg": {"label": st.label, "degree": st.degree},
        "classes": list(report.classes),
        "constant_rows": rows,
    }
    return Verdict("thm-lie", not failures, evidence, failures)


def _corpus_lie(key: str) -> Verdict:
    g = corpus.GROUPS[key]
    s = g.lie[0]
    T = corpus.table(key)
    v = verify_lie(T, s.characteristic, s.characteristic ** valuation(T.order, s.characteristic), s.family)
    v.evidence["key"] = key
    return v


def _combine(claim: str, parts: list[Verdict], extra: dict | None = None) -> Verdict:
    evidence = {"cases": [v.evidence for v in parts]}
    evidence.update(extra or {})
    failures = [f for v in parts for f in v.failures]
    return Verdict(claim, all(v.passed for v in parts), evidence, failures)


def claim_thm_lie(groups: list[str] | None = None) -> Verdict:
    keys = sorted(groups or corpus.LIE_CORPUS)
    return _combine("thm-lie", [_corpus_lie(k) for k in keys])


def claim_steinberg_neighbors(groups: list[str] | None = None) -> Verdict:
    """Degrees St(1) + 1 and St(1) - 1 occur exactly for the listed families."""
    keys = sorted(groups or [k for k in corpus.LIE_CORPUS if corpus.GROUPS[k].lie[0].simply_connected])
    parts = []
    for key in keys:
        s = corpus.GROUPS[key].lie[0]
        if not s.simply_connected:
            raise ValueError(f"{key} is not a simply connected group of Lie type")
        T = corpus.table(key)
        st = s.characteristic ** valuation(T.order, s.characteristic)
        name = _family_name(s.family)
        degs = set(T.degrees)
        failures = []
        found = {}
        for sign in (1, -1):
            present = st + sign in degs
            expect = name in NEIGHBOURS[sign]
            found["plus" if sign > 0 else "minus"] = present
            if present != expect:
                failures.append(f"{corpus.GROUPS[key].name}: degree {st + sign} {'present' if present else 'absent'}")
        ev = {"group": T.name, "family": name, "steinberg": st, **found}
        parts.append(Verdict("thm-steinberg-neighbors", not failures, ev, failures))
    return _combine("thm-steinberg-neighbors", parts)


# -- symmetric and alternating groups ---------------------------------------------

def sym_cyclic_list(n: int, p: int) -> list[Partition]:
    """The nonlinear nonzero-defect p-constant partitions for p <= n < 2p."""
    if not p <= n < 2 * p:
        raise ValueError("needs p <= n < 2p")
    r = n - p
    out: list[tuple[int, ...]] = []
    if r == 0 and p >= 3:
        out = [(b,) + (1,) * (p - b) for b in range(2, p)]
    elif r == 1 and p >= 3:
        out = [(b + 1, 2) + (1,) * (p - b - 2) for b in range(1, p - 1)]
    elif r >= 2:
        out = [(p - a, r + 1) + (1,) * (a - 1) for a in range(1, p - r)]
        out += [(r, b) + (1,) * (p - b) for b in range(1, r + 1)]
    return sorted({Partition(lam) for lam in out})


def alt_cyclic_pairs(n: int, p: int) -> set[frozenset]:
    """The same lists for Alt_n, as unordered pairs {lam, lam^T}."""
    r = n - p
    lams = sym_cyclic_list(n, p)
    if r == 0:
        if n < 5:
            return set()
        lams = [lam for lam in lams if lam[0] != (p + 1) // 2]
    elif r == 1:
        if n < 6:
            return set()
        lams = [lam for lam in lams if lam[0] - 1 != (p - 1) // 2]
    return {frozenset((lam, conjugate(lam))) for lam in lams}


def large_alt_pairs(n: int, p: int) -> set[frozenset] | None:
    """Partitions whose Alt_n constituents are the nonlinear p-constant rows of nonzero defect, n >= 2p."""
    if p == 2:
        return None
    if n == 2 * p:
        lams = [(p,) + (1,) * p, (p, 2) + (1,) * (p - 2)]
    elif n == 2 * p + 1:
        lams = [(p + 1,) + (1,) * p, (p + 1, 2) + (1,) * (p - 2)]
    else:
        lams = []
    return {frozenset((Partition(lam), conjugate(Partition(lam)))) for lam in lams}


ALT_P2_DEGREES = {5: [3, 5], 6: [9], 7: [15]}


def claim_thm_alt(n: int, p: int) -> Verdict:
    if n < 5 or p > n:
        raise ValueError("thm-alt needs n >= 5 and p <= n")
    report = p_constant_report(alt_character_table(n), p)
    hits = report.nonlinear_nonzero_defect()
    rows = [{"label": e.label, "degree": e.degree, "constant": encode_value(e.constant)} for e in hits]
    failures = [f"{e.label}: value {encode_value(e.constant)} is not +-1" for e in hits if e.constant not in (1, -1)]
    evidence: dict[str, Any] = {"group": report.group, "p": p, "rows": rows}
    if p == 2:
        expect = ALT_P2_DEGREES.get(n, [])
        got = sorted(set(e.degree for e in hits))
        evidence["expected_degrees"] = expect
        if got != expect:
            failures.append(f"degrees {got}, expected {expect}")
    else:
        expect = alt_cyclic_pairs(n, p) if n < 2 * p else large_alt_pairs(n, p)
        got = {frozenset((lam, conjugate(lam))) for lam in (row_partition(e.label) for e in hits)}
        evidence["expected"] = sorted(str(min(pair)) for pair in expect)
        if got != expect:
            failures.append(
                f"constituents of {sorted(str(min(x)) for x in got)}, expected {evidence['expected']}"
            )
    return Verdict("thm-alt", not failures, evidence, failures)


def claim_sym_defect0(p: int, n_max: int) -> Verdict:
    """Sym_n, 2p <= n <= n_max: every nonlinear p-constant character has defect 0."""
    cases, failures = [], []
    for n in range(2 * p, n_max + 1):
        bad = [e for e in classify_sym(n, p) if e.is_constant and e.degree > 1 and e.defect > 0]
        cases.append({"n": n, "offending": [str(e.partition) for e in bad]})
        failures += [f"Sym{n}: {e.partition} constant {e.constant} with defect {e.defect}" for e in bad]
    return Verdict("prop-sym-defect0", not failures, {"p": p, "cases": cases}, failures)


# -- scans -------------------------------------------------------------------------

def claim_lemma(sign: int, q_max: int, rank_max: int) -> Verdict:
    report = scan_families(q_max, rank_max)
    r_attr = "minus" if sign < 0 else "plus"
    bad = [e for e in report.entries if getattr(e, r_attr).divides != expected(e.minus.family, e.q, sign)]
    positives = report.positives(sign)
    failures = [f"{e.minus.family.label(e.q)} disagrees with the expected list" for e in bad]
    evidence = {"q_max": q_max, "rank_max": rank_max, "instances": len(report.entries), "positives": positives}
    return Verdict("lemma-minus" if sign < 0 else "lemma-plus", not failures, evidence, failures)


# -- sporadic and cross-characteristic values ---------------------------------------

def claim_m22() -> Verdict:
    """Exactly one nonlinear 3-constant row of M22 has a constant outside {-1, 0, 1}: (385, -2).

    Rows of nonzero defect with constant +-1 also exist (degrees 55, 154,
    280, 280); they are listed in the evidence but are not exceptions.
    """
    report = p_constant_report(corpus.table("m22"), 3)
    hits = report.nonlinear_nonzero_defect()
    rows = [{"label": e.label, "degree": e.degree, "constant": encode_value(e.constant)} for e in hits]
    odd = [e for e in hits if e.constant not in (-1, 0, 1)]
    ok = len(odd) == 1 and odd[0].degree == 385 and odd[0].constant == -2
    witness = [{"degree": e.degree, "constant": encode_value(e.constant)} for e in odd]
    failures = [] if ok else [f"expected the single exception (385, -2), found {witness}"]
    return Verdict("m22-exception", ok, {"group": "M22", "p": 3, "witness": witness, "rows": rows}, failures)


def claim_psl37() -> Verdict:
    report = p_constant_report(corpus.table("psl3_7"), 3)
    rows = [
        {"label": e.label, "degree": e.degree, "constant": encode_value(e.constant)}
        for e in report.constant_entries()
    ]
    ok = any(e.constant == 2 for e in report.constant_entries())
    failures = [] if ok else ["no 3-constant row with value 2"]
    return Verdict("psl37-remark", ok, {"group": "PSL3(7)", "p": 3, "rows": rows}, failures)


def trichotomy(T: CharacterTable, p: int, lie: tuple = (), exceptions: tuple = ()) -> Verdict:
    """Constants lie in {-1, 0, 1} unless excused.

    Excused are the (degree, value) pairs in ``exceptions`` and, for a group
    of Lie type (``lie`` non-empty) with p not a defining characteristic,
    anything when the Sylow p-subgroup is not cyclic.
    """
    report = p_constant_report(T, p)
    cyclic = sylow_is_cyclic(T, p)
    cross = bool(lie) and all(s.characteristic != p for s in lie)
    rows, failures = [], []
    for e in report.constant_entries():
        if e.constant in (-1, 0, 1):
            continue
        pair = (e.degree, int(e.constant)) if e.constant.is_rational() else None
        reason = None
        if pair in exceptions:
            reason = "listed exception"
        elif cross and not cyclic:
            reason = "cross characteristic, non-cyclic Sylow"
        rows.append({"label": e.label, "degree": e.degree, "constant": encode_value(e.constant), "excused": reason})
        if reason is None:
            failures.append(f"{T.name} p={p}: {e.label} constant {encode_value(e.constant)}")
    ev = {"group": T.name, "p": p, "sylow_cyclic": cyclic, "outside": rows}
    return Verdict("thm-trichotomy", not failures, ev, failures)


TRICHOTOMY_EXCEPTIONS = {("m22", 3): ((385, -2),)}


def claim_trichotomy(groups: list[str] | None = None, include_slow: bool = False) -> Verdict:
    keys = sorted(groups or [k for k, g in corpus.GROUPS.items() if include_slow or not g.slow])
    parts = []
    for key in keys:
        g = corpus.GROUPS[key]
        T = corpus.table(key)
        for p in _primes(T.order):
            parts.append(trichotomy(T, p, g.lie, TRICHOTOMY_EXCEPTIONS.get((key, p), ())))
    return _combine("thm-trichotomy", parts)


def _primes(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- dispatch ----------------------------------------------------------------------

def _split(value) -> list[str] | None:
    if value is None or isinstance(value, list):
        return value
    return [v for v in str(value).split(",") if v]


_DISPATCH: dict[str, Callable[[dict], Verdict]] = {
    "thm-lie": lambda a: claim_thm_lie(_split(a.get("groups"))),
    "thm-trichotomy": lambda a: claim_trichotomy(_split(a.get("groups")), bool(a.get("include_slow", False))),
    "thm-alt": lambda a: claim_thm_alt(int(a.get("n", 10)), int(a.get("p", 5))),
    "prop-sym-defect0": lambda a: claim_sym_defect0(int(a.get("p", 5)), int(a.get("n_max", 15))),
    "lemma-minus": lambda a: claim_lemma(-1, int(a.get("qmax", 16)), int(a.get("rankmax", 8))),
    "lemma-plus": lambda a: claim_lemma(1, int(a.get("qmax", 16)), int(a.get("rankmax", 8))),
    "thm-steinberg-neighbors": lambda a: claim_steinberg_neighbors(_split(a.get("groups"))),
    "m22-exception": lambda a: claim_m22(),
    "psl37-remark": lambda a: claim_psl37(),
}


def verify_claim(claim: str, params: dict | None = None) -> Verdict:
    if claim not in _DISPATCH:
        raise UnknownClaim(claim)
    return _DISPATCH[claim](params or {})
