"""Command line interface.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .altchar import alt_character_table
from .dixon import dixon_table
from .formats import FormatError, read_generators, read_table, serialize_table
from .lieorders import InvalidParameter, LieFamily, divides_pm, group_order, scan_families, zsigmondy
from .pconst import NoSingular, p_constant_report, valuation
from .perm import BoundExceeded, InvalidPermutation, PermutationGroup
from .symchar import BoundExceeded as SymBoundExceeded
from .symchar import sym_character_table
from .table import CharacterTable
from . import verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _table_json(T: CharacterTable) -> dict:
    return {
        "group": T.name,
        "order": T.order,
        "classes": [{"name": c.name, "size": c.size, "order": c.order} for c in T.classes],
        "power_maps": {str(t): [i + 1 for i in m] for t, m in sorted(T.power_maps.items())},
        "characters": [
            {"label": T.label(i), "degree": int(row[0]), "values": [str(v) for v in row]}
            for i, row in enumerate(T.rows)
        ],
    }


def _emit_table(args, T: CharacterTable) -> int:
    T = T.canonical()
    _emit(args, _dump(_table_json(T)) if args.json else serialize_table(T))
    return EXIT_OK


# -- subcommands -----------------------------------------------------------------

def cmd_sym_table(args) -> int:
    return _emit_table(args, sym_character_table(args.n))


def cmd_alt_table(args) -> int:
    if args.n < 3:
        raise UsageError("alt-table needs N >= 3")
    return _emit_table(args, alt_character_table(args.n))


def cmd_dixon(args) -> int:
    doc = read_generators(args.genfile)
    G = PermutationGroup(doc.generators, degree=doc.degree, bound=args.bound)
    if doc.order is not None and doc.order != G.order:
        raise UsageError(f"{args.genfile}: generators give order {G.order}, header says {doc.order}")
    return _emit_table(args, dixon_table(G, seed=args.seed, name=args.name or doc.name))


def _report_text(report) -> str:
    lines = [f"# {report.group} p={report.p} classes: {' '.join(report.classes)}"]
    for e in report.entries:
        d = e.to_dict()
        lines.append(f"{d['label']}\t{d['degree']}\t{d['constant']}\t{d['defect']}\t{d['tag']}")
    return "\n".join(lines) + "\n"


def cmd_pconst(args) -> int:
    if args.source == "table":
        T = read_table(args.target, strict=args.strict).table
    else:
        n = int(args.target)
        if args.source == "sym":
            T = sym_character_table(n)
        else:
            if n < 3:
                raise UsageError("pconst alt needs N >= 3")
            T = alt_character_table(n)
    report = p_constant_report(T, args.p)
    if args.only_constant:
        report = type(report)(report.group, report.p, report.order, report.classes,
                              tuple(e for e in report.entries if e.is_constant))
    _emit(args, report.to_json() + "\n" if args.json else _report_text(report))
    return EXIT_OK


def cmd_zsigmondy(args) -> int:
    if args.a < 2 or args.n < 3:
        raise UsageError("zsigmondy needs A >= 2 and N >= 3")
    z = zsigmondy(args.a, args.n)
    if args.json:
        _emit(args, _dump({"a": args.a, "n": args.n, "prime": z}))
    else:
        _emit(args, ("none" if z is None else str(z)) + "\n")
    return EXIT_OK


def _family_and_q(args) -> tuple[LieFamily, int]:
    f = LieFamily.parse(args.family)
    q = args.qsq if args.qsq is not None else args.q
    if q is None:
        raise UsageError("give Q (or --qsq for the Suzuki and Ree families)")
    return f, q


def cmd_lie(args) -> int:
    if args.lie_cmd == "order":
        f, q = _family_and_q(args)
        d = group_order(f, q)
        obj = {"family": f.name, "q": q, "order": d.order, "p": d.p, "p_part": d.p_part, "m": d.m}
        _emit(args, _dump(obj) if args.json else f"{f.label(q)}\torder {d.order}\t|G|_p = {d.p}^{valuation(d.p_part, d.p)}\n")
        return EXIT_OK
    if args.lie_cmd == "divides":
        f, q = _family_and_q(args)
        sign = 1 if args.sign == "plus" else -1
        r = divides_pm(f, q, sign)
        w = r.witness
        obj = {
            "family": f.name, "q": q, "sign": args.sign, "divides": r.divides,
            "witness": None if w is None else {"index": w.index, "prime": w.prime, "factor": str(w.factor)},
        }
        if args.json:
            _emit(args, _dump(obj))
        else:
            op = "+" if sign > 0 else "-"
            line = f"{f.label(q)}: |G|_p {op} 1 {'divides' if r.divides else 'does not divide'} |G|"
            if w is not None:
                line += f" (witness: prime {w.prime if w.prime else '?'} from Phi_{w.index}(q))"
            _emit(args, line + "\n")
        return EXIT_OK
    report = scan_families(args.qmax, args.rankmax)
    if args.json:
        obj = {
            "q_max": args.qmax, "rank_max": args.rankmax,
            "minus": report.positives(-1), "plus": report.positives(1),
            "mismatches": [e.minus.family.label(e.q) for e in report.mismatches],
            "notes": {e.minus.family.label(e.q): e.notes for e in report.entries if e.notes},
        }
        _emit(args, _dump(obj))
    else:
        lines = [
            f"instances: {len(report.entries)}",
            "minus: " + " ".join(report.positives(-1)),
            "plus: " + " ".join(report.positives(1)),
            "mismatches: " + (" ".join(e.minus.family.label(e.q) for e in report.mismatches) or "none"),
        ]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_FAIL if report.mismatches else EXIT_OK


def _params(items: Sequence[str]) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not KEY=VALUE")
        k, v = item.split("=", 1)
        out[k.replace("-", "_")] = v
    return out


def cmd_verify(args) -> int:
    params = _params(args.params)
    if args.table:
        verdict = _verify_table(args.claim, read_table(args.table, strict=args.strict).table, params)
    else:
        verdict = verify.verify_claim(args.claim, params)
    if args.json:
        _emit(args, _dump(verdict.to_dict()))
    else:
        lines = [f"{verdict.claim}: {'PASS' if verdict.passed else 'FAIL'}"]
        if "witness" in verdict.evidence:
            lines.append("witness: " + json.dumps(verdict.evidence["witness"]))
        lines += [f"  {f}" for f in verdict.failures]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if verdict.passed else EXIT_FAIL


def _verify_table(claim: str, T: CharacterTable, params: dict):
    if "p" not in params:
        raise UsageError("checking a table file needs p=P")
    p = int(params["p"])
    if claim == "thm-lie":
        family = params.get("family")
        return verify.verify_lie(T, p, p ** valuation(T.order, p), family)
    if claim == "thm-trichotomy":
        from .corpus import LieStructure

        lie = tuple(LieStructure("?", 0, int(c), False) for c in params.get("lie", "").split(",") if c)
        exceptions = tuple(
            tuple(int(x) for x in pair.split(":")) for pair in params.get("exceptions", "").split(",") if pair
        )
        return verify.trichotomy(T, p, lie, exceptions)
    raise UsageError(f"{claim} does not take --table")


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="pconstant", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sym-table", parents=[common], help="character table of Sym_N")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_sym_table)

    s = sub.add_parser("alt-table", parents=[common], help="character table of Alt_N")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_alt_table)

    s = sub.add_parser("dixon", parents=[common], help="character table of a permutation group")
    s.add_argument("genfile")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--bound", type=int, default=None, help="enumeration bound (default 2^21 or $PCONST_BOUND)")
    s.add_argument("--name", default=None)
    s.set_defaults(func=cmd_dixon)

    s = sub.add_parser("pconst", parents=[common], help="p-constant characters")
    s.add_argument("source", choices=("sym", "alt", "table"))
    s.add_argument("target", help="N for sym/alt, a table file for table")
    s.add_argument("p", type=int)
    s.add_argument("--strict", action="store_true", help="reject tables failing the orthogonality checks")
    s.add_argument("--only-constant", action="store_true", help="list only the constant rows")
    s.set_defaults(func=cmd_pconst)

    s = sub.add_parser("zsigmondy", parents=[common], help="least primitive prime divisor of A^N - 1")
    s.add_argument("a", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_zsigmondy)

    lie = sub.add_parser("lie", help="orders of groups of Lie type")
    lsub = lie.add_subparsers(dest="lie_cmd", required=True)
    for name in ("order", "divides"):
        s = lsub.add_parser(name, parents=[common])
        s.add_argument("family")
        s.add_argument("q", type=int, nargs="?")
        s.add_argument("--qsq", type=int, help="the parameter q^2 of a Suzuki or Ree group")
        if name == "divides":
            s.add_argument("--sign", choices=("plus", "minus"), required=True)
        s.set_defaults(func=cmd_lie)
    s = lsub.add_parser("scan", parents=[common])
    s.add_argument("--qmax", type=int, default=16)
    s.add_argument("--rankmax", type=int, default=8)
    s.set_defaults(func=cmd_lie)

    s = sub.add_parser("verify", parents=[common], help="check one of the classification claims")
    s.add_argument("claim", choices=verify.CLAIMS)
    s.add_argument("params", nargs="*", metavar="KEY=VALUE")
    s.add_argument("--table", metavar="FILE", help="check a table file instead of the built-in corpus")
    s.add_argument("--no-strict", dest="strict", action="store_false", help="accept tables with warnings")
    s.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, FormatError, InvalidParameter, InvalidPermutation, NoSingular,
            BoundExceeded, SymBoundExceeded, verify.NoDefectZeroRow, OSError, ValueError) as exc:
        print(f"pconstant: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
