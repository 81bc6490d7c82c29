"""The batch input language: parse scripts, run their queries, render reports.

A script is line oriented::

    # comments run to end of line
    algebra A = ring(x, y) / ideal(y^2 - x^3) prime
    profile P = pullback_field(r = 1)
    profile Q = from_algebra(A)
    query dim_tensor(P, Q)
    query ht_mixed(P, P, node(1), max)

``prime`` asserts that the ideal is prime; a bare ``ring(...)`` is always a
domain. Nodes are written ``node(i)``, ``min`` or ``max``.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from typing import Callable

from . import engine, groebner, profile
from .groebner import AlgebraPresentation
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial


class ScriptError(Exception):
    """Syntax or name error, located at a 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


# tokens --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[()=,/+\-*^]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    col: int


def tokenize(line: str, lineno: int) -> list[Token]:
    line = line.split("#", 1)[0].rstrip()
    out, pos = [], 0
    while pos < len(line):
        m = _TOKEN.match(line, pos)
        if not m or m.end() == pos:
            col = len(line) - len(line[pos:].lstrip()) + 1
            raise ScriptError(f"unexpected character {line[col - 1]!r}", lineno, col)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return out


class _Cursor:
    def __init__(self, tokens: list[Token], lineno: int, line: str):
        self.toks = tokens
        self.i = 0
        self.lineno = lineno
        self.end_col = len(line.split("#", 1)[0].rstrip()) + 1

    def peek(self, k: int = 0) -> Token | None:
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def fail(self, message: str, tok: Token | None = None):
        tok = tok if tok is not None else self.peek()
        col = tok.col if tok is not None else self.end_col
        raise ScriptError(message, self.lineno, col)

    def next(self, what: str = "token") -> Token:
        tok = self.peek()
        if tok is None:
            self.fail(f"expected {what}, found end of line")
        self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        tok = self.peek()
        if tok is not None and tok.text == text and tok.kind != "int":
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok is None or tok.text != text:
            found = "end of line" if tok is None else repr(tok.text)
            self.fail(f"expected {text!r}, found {found}")
        self.i += 1
        return tok

    def name(self, what: str = "name") -> Token:
        tok = self.next(what)
        if tok.kind != "name":
            self.fail(f"expected {what}, found {tok.text!r}", tok)
        return tok

    def integer(self) -> int:
        tok = self.next("integer")
        if tok.kind != "int":
            self.fail(f"expected integer, found {tok.text!r}", tok)
        return int(tok.text)

    def done(self) -> bool:
        return self.i >= len(self.toks)


# polynomial expressions ------------------------------------------------------

class _PolyParser:
    """``expr := term (('+'|'-') term)*``, ``term := unary (['*'|'/'] unary)*``,
    ``unary := '-' unary | atom ['^' INT]``."""

    def __init__(self, cur: _Cursor, variables: tuple[str, ...]):
        self.cur = cur
        self.vars = variables
        self.n = len(variables)

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            if self.cur.accept("+"):
                p = p + self.term()
            elif self.cur.accept("-"):
                p = p - self.term()
            else:
                return p

    def _starts_factor(self) -> bool:
        tok = self.cur.peek()
        return tok is not None and (tok.kind in ("int", "name") or tok.text == "(")

    def term(self) -> Polynomial:
        p = self.unary()
        while True:
            if self.cur.accept("*") or self._starts_factor():
                p = p * self.unary()
            elif self.cur.peek() is not None and self.cur.peek().text == "/":
                tok = self.cur.next()
                d = self.unary()
                if not d.is_constant() or not d:
                    self.cur.fail("can only divide by a nonzero constant", tok)
                p = p * (1 / d.coeff((0,) * self.n))
            else:
                return p

    def unary(self) -> Polynomial:
        if self.cur.accept("-"):
            return -self.unary()
        if self.cur.accept("+"):
            return self.unary()
        base = self.atom()
        if self.cur.accept("^"):
            base = base ** self.cur.integer()
        return base

    def atom(self) -> Polynomial:
        tok = self.cur.next("polynomial")
        if tok.kind == "int":
            return Polynomial.constant(self.n, int(tok.text))
        if tok.kind == "name":
            if tok.text not in self.vars:
                self.cur.fail(f"unknown variable {tok.text!r}", tok)
            return Polynomial.variable(self.n, self.vars.index(tok.text))
        if tok.text == "(":
            p = self.expr()
            self.cur.expect(")")
            return p
        self.cur.fail(f"unexpected {tok.text!r} in polynomial", tok)


# script structure -------------------------------------------------------------

PROFILE_KINDS = ("field", "fg_domain", "example_2_8", "pullback_field", "from_algebra")


@dataclass(frozen=True)
class Binding:
    name: str
    kind: str  # "algebra" | "profile"
    line: int
    algebra: AlgebraPresentation | None = None
    builder: str = ""
    params: tuple[tuple[str, int], ...] = ()
    source: str = ""  # algebra name for from_algebra


@dataclass(frozen=True)
class Node:
    ref: object  # int index, "min" or "max"

    def __str__(self):
        return f"node({self.ref})" if isinstance(self.ref, int) else str(self.ref)


@dataclass(frozen=True)
class Ref:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Query:
    op: str
    args: tuple
    line: int
    col: int

    def call(self) -> str:
        return f"{self.op}({', '.join(str(a) for a in self.args)})"


@dataclass
class Script:
    bindings: list[Binding] = field(default_factory=list)
    queries: list[Query] = field(default_factory=list)

    def binding(self, name: str) -> Binding:
        for b in self.bindings:
            if b.name == name:
                return b
        raise KeyError(name)


def _parse_algebra(cur: _Cursor, name: str, lineno: int) -> Binding:
    cur.expect("ring")
    cur.expect("(")
    names = []
    if not cur.accept(")"):
        while True:
            tok = cur.name("variable name")
            if tok.text in names:
                cur.fail(f"duplicate variable {tok.text!r}", tok)
            names.append(tok.text)
            if cur.accept(")"):
                break
            cur.expect(",")
    if not names:
        cur.fail("a ring needs at least one variable")
    variables = tuple(names)
    gens, prime = [], True
    if cur.accept("/"):
        cur.expect("ideal")
        cur.expect("(")
        pp = _PolyParser(cur, variables)
        if not cur.accept(")"):
            while True:
                gens.append(pp.expr())
                if cur.accept(")"):
                    break
                cur.expect(",")
        prime = cur.accept("prime")
    elif cur.accept("prime"):
        pass
    if not cur.done():
        cur.fail(f"unexpected {cur.peek().text!r} after algebra definition")
    return Binding(name, "algebra", lineno, algebra=AlgebraPresentation(variables, tuple(gens), prime))


def _parse_profile(cur: _Cursor, name: str, lineno: int) -> Binding:
    kind_tok = cur.name("profile kind")
    kind = kind_tok.text
    if kind not in PROFILE_KINDS:
        cur.fail(f"unknown profile kind {kind!r}", kind_tok)
    cur.expect("(")
    if kind == "from_algebra":
        src = cur.name("algebra name").text
        cur.expect(")")
        if not cur.done():
            cur.fail("unexpected text after profile definition")
        return Binding(name, "profile", lineno, builder=kind, source=src)
    params = []
    if not cur.accept(")"):
        while True:
            key = cur.name("parameter name")
            cur.expect("=")
            params.append((key.text, cur.integer()))
            if cur.accept(")"):
                break
            cur.expect(",")
    if not cur.done():
        cur.fail("unexpected text after profile definition")
    try:
        profile.build_profile(kind, **dict(params))
    except (TypeError, ValueError) as exc:
        cur.fail(str(exc), kind_tok)
    return Binding(name, "profile", lineno, builder=kind, params=tuple(params))


def _parse_arg(cur: _Cursor):
    tok = cur.next("argument")
    if tok.kind == "int":
        return int(tok.text)
    if tok.text == "-" and cur.peek() is not None and cur.peek().kind == "int":
        return -cur.integer()
    if tok.kind != "name":
        cur.fail(f"unexpected {tok.text!r} in argument list", tok)
    if tok.text == "node" and cur.peek() is not None and cur.peek().text == "(":
        cur.expect("(")
        i = cur.integer()
        cur.expect(")")
        return Node(i)
    if tok.text in ("min", "max"):
        return Node(tok.text)
    if tok.text in (LEX, GREVLEX):
        return MonomialOrder(tok.text)
    return (Ref(tok.text), tok.col)


def parse_script(text: str) -> Script:
    """Parse a whole script; raises :class:`ScriptError` at the first problem."""
    script = Script()
    seen: dict[str, int] = {}
    refs: list[tuple[str, int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = tokenize(line, lineno)
        if not toks:
            continue
        cur = _Cursor(toks, lineno, line)
        head = cur.name("'algebra', 'profile' or 'query'")
        if head.text in ("algebra", "profile"):
            name_tok = cur.name("binding name")
            if name_tok.text in seen:
                cur.fail(f"duplicate name {name_tok.text!r} (first bound on line "
                         f"{seen[name_tok.text]})", name_tok)
            cur.expect("=")
            parse = _parse_algebra if head.text == "algebra" else _parse_profile
            b = parse(cur, name_tok.text, lineno)
            if b.source:
                refs.append((b.source, lineno, name_tok.col))
            seen[b.name] = lineno
            script.bindings.append(b)
        elif head.text == "query":
            op_tok = cur.name("query name")
            if op_tok.text not in QUERIES:
                cur.fail(f"unknown query {op_tok.text!r}", op_tok)
            cur.expect("(")
            args = []
            if not cur.accept(")"):
                while True:
                    a = _parse_arg(cur)
                    if isinstance(a, tuple):
                        refs.append((a[0].name, lineno, a[1]))
                        a = a[0]
                    args.append(a)
                    if cur.accept(")"):
                        break
                    cur.expect(",")
            if not cur.done():
                cur.fail("unexpected text after query")
            script.queries.append(Query(op_tok.text, tuple(args), lineno, op_tok.col))
        else:
            cur.fail(f"expected 'algebra', 'profile' or 'query', found {head.text!r}", head)

    kinds = {b.name: b.kind for b in script.bindings}
    for name, lineno, col in refs:
        if name not in kinds:
            raise ScriptError(f"undefined name {name!r}", lineno, col)
    for b in script.bindings:
        if b.source and kinds[b.source] != "algebra":
            raise ScriptError(f"from_algebra needs an algebra, {b.source!r} is a profile",
                              b.line, 1)
    for q in script.queries:
        _match_signature(q, kinds)
    return script


# dispatch ---------------------------------------------------------------------

def _arg_type(a, kinds) -> str:
    if isinstance(a, Ref):
        return "alg" if kinds[a.name] == "algebra" else "prof"
    if isinstance(a, Node):
        return "node"
    if isinstance(a, MonomialOrder):
        return "order"
    return "int"


def _match_signature(q: Query, kinds) -> int:
    types = tuple(_arg_type(a, kinds) for a in q.args)
    for i, (sig, _) in enumerate(QUERIES[q.op]):
        if types == sig:
            return i
    want = " | ".join("(" + ", ".join(sig) + ")" for sig, _ in QUERIES[q.op])
    raise ScriptError(f"{q.op} takes {want}, got ({', '.join(types)})", q.line, q.col)


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _q_dim_alg(a):
    return groebner.ideal_dimension(a)


def _q_dim_prof(s):
    return s.dim


def _q_height_alg(a):
    return groebner.prime_height(a)


def _q_height_prof(s, p):
    return s.height(s.resolve(p))


def _q_groebner(a, order=None):
    order = order or MonomialOrder(GREVLEX)
    basis = a.groebner(order)
    return "[" + "; ".join(g.format(a.variables, order) for g in basis) + "]"


def _q_dim_tensor_alg(a, b):
    return groebner.ideal_dimension(groebner.tensor_presentation(a, b))


def _q_validate(s):
    rep = profile.validate_profile(s)
    if rep.ok:
        return "ok"
    return ("invalid", str(rep))


def _q_gsct(A, B, p, q, delta):
    return engine.gsct_height(A, B, engine.TensorPrimeDescriptor(p, q, delta))


# each entry: (argument types, handler); handlers receive resolved values
QUERIES: dict[str, list[tuple[tuple[str, ...], Callable]]] = {
    "dim": [(("alg",), _q_dim_alg), (("prof",), _q_dim_prof)],
    "height": [(("alg",), _q_height_alg), (("prof", "node"), _q_height_prof)],
    "groebner": [(("alg",), _q_groebner), (("alg", "order"), _q_groebner)],
    "dim_tensor": [(("prof", "prof"), engine.dim_tensor_thm27),
                   (("alg", "alg"), _q_dim_tensor_alg)],
    "dim_tensor_af": [(("prof", "prof"), engine.dim_tensor_af_any),
                      (("int",) * 4, engine.dim_tensor_af_af)],
    "dim_tensor_fields": [(("int", "int"), engine.dim_tensor_fields)],
    "wadsworth_D": [(("int", "int", "prof"), engine.wadsworth_D)],
    "ht_mixed": [(("prof", "prof", "node", "node"), engine.ht_mixed_ideal)],
    "gsct": [(("prof", "prof", "node", "node", "int"), _q_gsct)],
    "sct": [(("prof", "prof", "node", "int"), engine.sct_height)],
    "ht_min_ext": [(("prof", "prof", "node"), engine.ht_min_over_extension)],
    "onedim_ht": [(("prof", "prof", "node", "node", "int"), engine.onedim_ht)],
    "af": [(("prof",), lambda s: _fmt_bool(profile.is_af_domain(s)))],
    "afn": [(("prof", "int"), lambda s, n: _fmt_bool(profile.is_afn(s, n)))],
    "locally_jaffard": [(("prof",), lambda s: _fmt_bool(profile.is_locally_jaffard(s)))],
    "validate": [(("prof",), _q_validate)],
}

# failures that become refusal records rather than crashes
REFUSALS = (engine.PreconditionError, groebner.EmptySpectrum, groebner.NotPrime,
            profile.NotADomain, ValueError, KeyError, IndexError)


@dataclass(frozen=True)
class ReportRecord:
    query_id: str
    op: str
    status: str  # "ok" | "refused"
    value: str
    witness: str = ""
    breakdown: str = ""
    elapsed: float = 0.0


class _Env:
    def __init__(self, script: Script):
        self.script = script
        self.cache: dict[str, object] = {}

    def get(self, name: str):
        if name not in self.cache:
            b = self.script.binding(name)
            if b.kind == "algebra":
                self.cache[name] = b.algebra
            elif b.builder == "from_algebra":
                self.cache[name] = profile.profile_from_presentation(self.get(b.source))
            else:
                self.cache[name] = profile.build_profile(b.builder, **dict(b.params))
        return self.cache[name]

    def resolve(self, a):
        if isinstance(a, Ref):
            return self.get(a.name)
        if isinstance(a, Node):
            return a.ref
        return a


def _clean(text: str) -> str:
    return " ".join(str(text).split())


def run_query(q: Query, env: _Env, qid: str) -> ReportRecord:
    kinds = {b.name: b.kind for b in env.script.bindings}
    _, handler = QUERIES[q.op][_match_signature(q, kinds)]
    start = time.perf_counter()
    try:
        result = handler(*(env.resolve(a) for a in q.args))
    except REFUSALS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        return ReportRecord(qid, q.call(), "refused", "-", _clean(msg),
                            elapsed=time.perf_counter() - start)
    elapsed = time.perf_counter() - start
    if isinstance(result, engine.FormulaTrace):
        return ReportRecord(qid, q.call(), "ok", str(result.value), result.witness_str(),
                            result.terms_str(), elapsed)
    if isinstance(result, tuple):
        value, detail = result
        return ReportRecord(qid, q.call(), "ok", value, _clean(detail), elapsed=elapsed)
    return ReportRecord(qid, q.call(), "ok", str(result), elapsed=elapsed)


def execute_script(script: Script) -> list[ReportRecord]:
    """Run every query in order; failed preconditions become ``refused`` records."""
    env = _Env(script)
    return [run_query(q, env, f"q{i}") for i, q in enumerate(script.queries, start=1)]


HEADER = ("id", "query", "status", "value", "witness")


def format_report(records: list[ReportRecord], mode: str = "text") -> str:
    """``machine``: one tab-separated line per record, stable across runs.
    ``text``: aligned table with formula breakdowns and timings."""
    if mode == "machine":
        return "".join(
            "\t".join((r.query_id, r.op, r.status, r.value, r.witness or "-")) + "\n"
            for r in records)
    if mode != "text":
        raise ValueError(f"unknown report mode {mode!r}")
    rows = [HEADER] + [(r.query_id, r.op, r.status, r.value, r.witness or "-") for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(HEADER) - 1)]
    lines = []
    for k, row in enumerate(rows):
        cells = [c.ljust(w) for c, w in zip(row, widths)] + [row[-1]]
        line = "  ".join(cells)
        if k:
            line += f"  ({records[k - 1].elapsed * 1000:.1f} ms)"
        lines.append(line.rstrip())
        if k and records[k - 1].breakdown:
            lines.append(" " * (widths[0] + 2) + "= " + records[k - 1].breakdown)
    return "\n".join(lines) + "\n"
