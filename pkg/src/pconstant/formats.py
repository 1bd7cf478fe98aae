"""Generator files and the character-table text format.

Generator file::

    %degree 22
    %group M22            (optional)
    %order 443520         (optional, checked by callers that enumerate)
    (1,13)(2,8)(3,16)
    ...

Table file::

    %group Alt5
    %order 60
    %classes 5
    %class 1a 1 1
    ...
    %powermap 2 1 1 3 5 4
    %char 3 3 -1 0 -E(5)^2-E(5)^3 1+E(5)^2+E(5)^3

Values are cyclotomic expressions over integers, rationals ``a/b``,
``E(n)``, ``SQRT(d)``, ``^``, ``*``, ``/``, ``+``, ``-`` and parentheses,
written without spaces.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field

from .cyclotomic import Cyclotomic, E, sqrt_cyclotomic
from .perm import InvalidPermutation, Permutation
from .table import CharacterTable, ClassInfo, OrthogonalityError

log = logging.getLogger(__name__)


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


# -- cyclotomic expressions ----------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(E|SQRT)\(|([-+*/^()]))")


class _ExprParser:
    def __init__(self, text: str, line: int | None, col0: int):
        self.text = text
        self.pos = 0
        self.line = line
        self.col0 = col0
        self.tokens: list[tuple[str, str, int]] = []
        i = 0
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            m = _TOKEN.match(text, i)
            if m is None:
                self._fail(f"unexpected character {text[i]!r}", i)
            if m.group(1):
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2):
                self.tokens.append((m.group(2), m.group(2), m.start(2)))
            else:
                self.tokens.append((m.group(3), m.group(3), m.start(3)))
            i = m.end()
        self.k = 0

    def _fail(self, msg: str, at: int | None = None):
        at = len(self.text) if at is None else at
        raise FormatError(f"{msg} in expression {self.text!r}", self.line, self.col0 + at + 1)

    def peek(self) -> str | None:
        return self.tokens[self.k][0] if self.k < len(self.tokens) else None

    def take(self, kind: str) -> str:
        if self.peek() != kind:
            at = self.tokens[self.k][2] if self.k < len(self.tokens) else None
            self._fail(f"expected {kind!r}", at)
        tok = self.tokens[self.k]
        self.k += 1
        return tok[1]

    def parse(self) -> Cyclotomic:
        if not self.tokens:
            self._fail("empty expression", 0)
        value = self.expr()
        if self.k != len(self.tokens):
            self._fail("trailing input", self.tokens[self.k][2])
        return value

    def expr(self) -> Cyclotomic:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Cyclotomic:
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take(self.peek())
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    self._fail("division by zero")
                value = value / rhs
        return value

    def unary(self) -> Cyclotomic:
        if self.peek() == "-":
            self.take("-")
            return -self.unary()
        if self.peek() == "+":
            self.take("+")
            return self.unary()
        return self.power()

    def power(self) -> Cyclotomic:
        base = self.atom()
        if self.peek() == "^":
            self.take("^")
            neg = False
            if self.peek() == "-":
                self.take("-")
                neg = True
            exp = int(self.take("int"))
            base = base ** (-exp if neg else exp)
        return base

    def atom(self) -> Cyclotomic:
        kind = self.peek()
        if kind == "int":
            return Cyclotomic(int(self.take("int")))
        if kind in ("E", "SQRT"):
            self.take(kind)
            neg = False
            if self.peek() == "-":
                self.take("-")
                neg = True
            arg = int(self.take("int"))
            self.take(")")
            if kind == "E":
                if neg or arg < 1:
                    self._fail("E(n) needs n >= 1")
                return E(arg)
            return sqrt_cyclotomic(-arg if neg else arg)
        if kind == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value
        at = self.tokens[self.k][2] if self.k < len(self.tokens) else None
        self._fail("expected a number, E(n), SQRT(d) or '('", at)
        raise AssertionError  # unreachable


def parse_cyclo(text: str, line: int | None = None, column: int = 0) -> Cyclotomic:
    return _ExprParser(text, line, column).parse()


# -- generators ----------------------------------------------------------------

@dataclass
class GeneratorDocument:
    degree: int
    generators: list[Permutation]
    name: str | None = None
    order: int | None = None
    source: str | None = None


_CYCLE = re.compile(r"\(([^()]*)\)")


def _parse_cycles(text: str, degree: int, lineno: int) -> Permutation:
    pos = 0
    cycles = []
    seen: set[int] = set()
    stripped = text.rstrip()
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = _CYCLE.match(stripped, pos)
        if m is None:
            raise FormatError("expected a cycle '(a,b,...)'", lineno, pos + 1)
        body = m.group(1).strip()
        if body:
            pts = []
            col = m.start(1)
            for piece in body.split(","):
                tok = piece.strip()
                if not tok.isdigit():
                    raise FormatError(f"bad point {tok!r}", lineno, col + 1)
                pt = int(tok)
                if not 1 <= pt <= degree:
                    raise FormatError(f"point {pt} outside 1..{degree}", lineno, col + 1)
                if pt in seen:
                    raise FormatError(f"repeated point {pt}", lineno, col + 1)
                seen.add(pt)
                pts.append(pt)
                col += len(piece) + 1
            cycles.append(pts)
        pos = m.end()
    try:
        return Permutation.from_cycles(cycles, degree)
    except InvalidPermutation as exc:
        raise FormatError(str(exc), lineno) from None


def parse_generators(text: str, source: str | None = None) -> GeneratorDocument:
    degree = None
    name = None
    order = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("%"):
            parts = line.split()
            key = parts[0]
            if key == "%degree":
                if len(parts) != 2 or not parts[1].isdigit():
                    raise FormatError("usage: %degree N", lineno, 1)
                degree = int(parts[1])
            elif key == "%group":
                name = " ".join(parts[1:])
            elif key == "%order":
                if len(parts) != 2 or not parts[1].isdigit():
                    raise FormatError("usage: %order N", lineno, 1)
                order = int(parts[1])
            else:
                raise FormatError(f"unknown directive {key}", lineno, 1)
            continue
        if degree is None:
            raise FormatError("generator before %degree header", lineno, 1)
        offset = len(raw) - len(raw.lstrip())
        try:
            gens.append(_parse_cycles(line, degree, lineno))
        except FormatError as exc:
            if exc.column is not None:
                raise FormatError(str(exc).split(": ", 1)[1], lineno, exc.column + offset) from None
            raise
    if degree is None:
        raise FormatError("missing %degree header")
    return GeneratorDocument(degree, gens, name, order, source)


def serialize_generators(doc: GeneratorDocument) -> str:
    lines = [f"%degree {doc.degree}"]
    if doc.name:
        lines.append(f"%group {doc.name}")
    if doc.order:
        lines.append(f"%order {doc.order}")
    lines.extend(str(g) for g in doc.generators)
    return "\n".join(lines) + "\n"


def read_generators(path) -> GeneratorDocument:
    with open(path) as fh:
        return parse_generators(fh.read(), source=str(path))


# -- tables --------------------------------------------------------------------

@dataclass
class TableDocument:
    table: CharacterTable
    source: str | None = None
    declared_name: str | None = None
    warnings: list[str] = field(default_factory=list)


def _int_field(tok: str, lineno: int, col: int, what: str) -> int:
    if not re.fullmatch(r"-?\d+", tok):
        raise FormatError(f"{what} must be an integer, got {tok!r}", lineno, col)
    return int(tok)


def _fields(line: str) -> list[tuple[str, int]]:
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line)]


def parse_table(text: str, strict: bool = False, source: str | None = None) -> TableDocument:
    name = None
    order = None
    nclasses = None
    classes: list[ClassInfo] = []
    pmaps: dict[int, list[int]] = {}
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _fields(raw)
        key = toks[0][0]
        args = toks[1:]
        if key == "%group":
            name = " ".join(t for t, _ in args)
        elif key == "%order":
            if len(args) != 1:
                raise FormatError("usage: %order N", lineno, toks[0][1])
            order = _int_field(args[0][0], lineno, args[0][1], "order")
        elif key == "%classes":
            if len(args) != 1:
                raise FormatError("usage: %classes K", lineno, toks[0][1])
            nclasses = _int_field(args[0][0], lineno, args[0][1], "class count")
        elif key == "%class":
            if len(args) != 3:
                raise FormatError("usage: %class NAME SIZE ORDER", lineno, toks[0][1])
            size = _int_field(args[1][0], lineno, args[1][1], "class size")
            eord = _int_field(args[2][0], lineno, args[2][1], "element order")
            classes.append(ClassInfo(args[0][0], size, eord))
        elif key == "%powermap":
            if nclasses is None:
                raise FormatError("%powermap before %classes", lineno, toks[0][1])
            if len(args) != nclasses + 1:
                raise FormatError(f"%powermap needs a prime and {nclasses} class indices", lineno, toks[0][1])
            t = _int_field(args[0][0], lineno, args[0][1], "power")
            images = []
            for tok, col in args[1:]:
                idx = _int_field(tok, lineno, col, "class index")
                if not 1 <= idx <= nclasses:
                    raise FormatError(f"class index {idx} outside 1..{nclasses}", lineno, col)
                images.append(idx - 1)
            pmaps[t] = images
        elif key == "%char":
            if nclasses is None:
                raise FormatError("%char before %classes", lineno, toks[0][1])
            if len(args) != nclasses + 1:
                raise FormatError(f"%char needs a degree and {nclasses} values, got {len(args) - 1}", lineno, toks[0][1])
            deg = _int_field(args[0][0], lineno, args[0][1], "degree")
            vals = [parse_cyclo(tok, lineno, col - 1) for tok, col in args[1:]]
            if vals[0] != deg:
                raise FormatError(f"degree {deg} differs from the identity value {vals[0]}", lineno, args[1][1])
            rows.append(vals)
        else:
            raise FormatError(f"unknown directive {key}", lineno, toks[0][1])
    if order is None or nclasses is None:
        raise FormatError("missing %order or %classes header")
    if len(classes) != nclasses:
        raise FormatError(f"declared {nclasses} classes but found {len(classes)} %class lines")
    table = CharacterTable(name or "unnamed", order, classes, rows, pmaps)
    doc = TableDocument(table, source, name)
    if sum(c.size for c in classes) != order:
        doc.warnings.append("class sizes do not sum to the declared order")
    try:
        table.check()
    except OrthogonalityError as exc:
        doc.warnings.append(str(exc))
    if doc.warnings:
        if strict:
            raise FormatError("table rejected: " + "; ".join(doc.warnings))
        for w in doc.warnings:
            log.warning("%s: %s", source or name or "table", w)
    return doc


def serialize_table(table: CharacterTable) -> str:
    lines = [f"%group {table.name}", f"%order {table.order}", f"%classes {len(table.classes)}"]
    for c in table.classes:
        lines.append(f"%class {c.name} {c.size} {c.order}")
    for t in sorted(table.power_maps):
        lines.append(f"%powermap {t} " + " ".join(str(i + 1) for i in table.power_maps[t]))
    for row in table.rows:
        lines.append(f"%char {int(row[0])} " + " ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def read_table(path, strict: bool = False) -> TableDocument:
    with open(path) as fh:
        return parse_table(fh.read(), strict=strict, source=str(path))


def write_table(table: CharacterTable, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_table(table))
