"""SPARQL subset: SELECT over basic graph patterns with FILTER comparisons.

Grammar:
    PREFIX label: <ns> ...
    SELECT [DISTINCT] (* | ?v ...) [WHERE] { patterns and FILTER(...) } [LIMIT n]

Patterns support ``;`` and ``,`` continuations. FILTER takes comparisons
(= != < <= > >=) joined by ``&&``.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from eg.errors import SyntaxDiagnosticError
from eg.graph import Graph, Iri, Literal, MalformedIri, Term, term_key
from eg.lexer import Token, TokenStream, diagnostic, unescape
from eg.turtle import PrefixMap, UnknownPrefix
from eg.vocab import RDF_TYPE, XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_INTEGER


class QuerySyntaxError(SyntaxDiagnosticError):
    pass


class UndeclaredPrefix(QuerySyntaxError):
    pass


@dataclass(frozen=True, order=True)
class Var:
    name: str

    def __str__(self) -> str:
        return f"?{self.name}"


Slot = Union[Var, Term]


@dataclass(frozen=True)
class TriplePattern:
    s: Slot
    p: Slot
    o: Slot

    def slots(self) -> tuple[Slot, Slot, Slot]:
        return (self.s, self.p, self.o)

    def variables(self) -> list[Var]:
        return [x for x in self.slots() if isinstance(x, Var)]


@dataclass(frozen=True)
class Comparison:
    left: Slot
    op: str
    right: Slot


@dataclass
class QueryAst:
    prefixes: PrefixMap
    projection: Optional[list[Var]]  # None = SELECT *
    patterns: list[TriplePattern]
    filters: list[Comparison] = field(default_factory=list)
    distinct: bool = False
    limit: Optional[int] = None

    def variables(self) -> list[Var]:
        """Pattern variables in order of first appearance."""
        seen: list[Var] = []
        for pat in self.patterns:
            for var in pat.variables():
                if var not in seen:
                    seen.append(var)
        return seen

    def header(self) -> list[Var]:
        return list(self.projection) if self.projection is not None else self.variables()


@dataclass
class BindingTable:
    header: list[Var]
    rows: list[dict[Var, Term]]

    def __len__(self) -> int:
        return len(self.rows)


# --- Parser ---

_NUMERIC_TOKENS = {"INTEGER": XSD_INTEGER, "DECIMAL": XSD_DECIMAL, "DOUBLE": XSD_DOUBLE}


class _Parser:
    def __init__(self, text: str) -> None:
        self.ts = TokenStream(text)
        self.prefixes = PrefixMap()

    def fail(self, tok: Token, message: str) -> QuerySyntaxError:
        return QuerySyntaxError(diagnostic(tok, message))

    def keyword(self, word: str) -> Token:
        tok = self.ts.next()
        if tok.kind != "WORD" or tok.text.upper() != word:
            raise self.fail(tok, f"expected {word}")
        return tok

    def punct(self, text: str) -> Token:
        tok = self.ts.next()
        if tok.kind != "PUNCT" or tok.text != text:
            raise self.fail(tok, f"expected '{text}'")
        return tok

    def parse(self) -> QueryAst:
        while self.ts.at_word("PREFIX"):
            self.ts.next()
            name = self.ts.next()
            if name.kind != "PNAME" or not name.text.endswith(":"):
                raise self.fail(name, "expected prefix label ending in ':'")
            ns = self.ts.next()
            if ns.kind != "IRIREF":
                raise self.fail(ns, "expected <namespace IRI>")
            self.prefixes[name.text[:-1]] = str(self.iriref(ns))

        self.keyword("SELECT")
        distinct = False
        if self.ts.at_word("DISTINCT"):
            self.ts.next()
            distinct = True
        projection: Optional[list[tuple[Var, Token]]] = None
        if self.ts.at("PUNCT", "*"):
            self.ts.next()
        else:
            projection = []
            while self.ts.at("VAR"):
                tok = self.ts.next()
                projection.append((Var(tok.text[1:]), tok))
            if not projection:
                raise self.fail(self.ts.peek(), "expected '*' or variables after SELECT")

        if self.ts.at_word("WHERE"):
            self.ts.next()
        self.punct("{")
        patterns: list[TriplePattern] = []
        filters: list[Comparison] = []
        while not self.ts.at("PUNCT", "}"):
            if self.ts.at_word("FILTER"):
                self.ts.next()
                filters.extend(self.filter())
            else:
                patterns.extend(self.triples_block())
            if self.ts.at("PUNCT", "."):
                self.ts.next()
        self.punct("}")

        limit = None
        if self.ts.at_word("LIMIT"):
            self.ts.next()
            tok = self.ts.next()
            if tok.kind != "INTEGER" or tok.text.startswith(("+", "-")):
                raise self.fail(tok, "expected non-negative integer after LIMIT")
            limit = int(tok.text)
        end = self.ts.next()
        if end.kind != "EOF":
            raise self.fail(end, "unexpected token after query")

        ast = QueryAst(
            prefixes=self.prefixes,
            projection=[var for var, _ in projection] if projection is not None else None,
            patterns=patterns,
            filters=filters,
            distinct=distinct,
            limit=limit,
        )
        known = set(ast.variables())
        for var, tok in projection or []:
            if var not in known:
                raise self.fail(tok, f"projected variable {var} does not occur in any pattern")
        return ast

    def triples_block(self) -> list[TriplePattern]:
        out = []
        subject = self.term(self.ts.next(), position="subject")
        while True:
            verb = self.term(self.ts.next(), position="predicate")
            while True:
                obj = self.term(self.ts.next(), position="object")
                out.append(TriplePattern(subject, verb, obj))
                if not self.ts.at("PUNCT", ","):
                    break
                self.ts.next()
            if not self.ts.at("PUNCT", ";"):
                return out
            while self.ts.at("PUNCT", ";"):
                self.ts.next()
            if self.ts.at("PUNCT", ".") or self.ts.at("PUNCT", "}"):
                return out

    def filter(self) -> list[Comparison]:
        self.punct("(")
        out = [self.comparison()]
        while self.ts.at("OP", "&&"):
            self.ts.next()
            out.append(self.comparison())
        self.punct(")")
        return out

    def comparison(self) -> Comparison:
        left = self.term(self.ts.next(), position="operand")
        op = self.ts.next()
        if op.kind != "OP" or op.text not in _OPS:
            raise self.fail(op, "expected comparison operator")
        right = self.term(self.ts.next(), position="operand")
        return Comparison(left, op.text, right)

    def term(self, tok: Token, position: str) -> Slot:
        if tok.kind == "VAR":
            return Var(tok.text[1:])
        if tok.kind == "WORD" and tok.text == "a" and position == "predicate":
            return Iri(RDF_TYPE)
        if tok.kind == "IRIREF":
            return self.iriref(tok)
        if tok.kind == "PNAME":
            try:
                return self.prefixes.expand(tok.text)
            except UnknownPrefix:
                raise UndeclaredPrefix(diagnostic(
                    tok, f"undeclared prefix '{tok.text.partition(':')[0]}:'",
                ))
            except MalformedIri as e:
                raise self.fail(tok, str(e))
        if position in ("object", "operand"):
            lit = self.literal(tok)
            if lit is not None:
                return lit
        raise self.fail(tok, f"expected {position}")

    def literal(self, tok: Token) -> Optional[Literal]:
        if tok.kind in _NUMERIC_TOKENS:
            return Literal(tok.text, _NUMERIC_TOKENS[tok.kind])
        if tok.kind == "WORD" and tok.text in ("true", "false"):
            return Literal(tok.text, XSD_BOOLEAN)
        if tok.kind != "STRING":
            return None
        try:
            lexical = unescape(tok.text[1:-1])
        except ValueError as e:
            raise self.fail(tok, str(e))
        if self.ts.at("LANGTAG"):
            return Literal(lexical, lang=self.ts.next().text[1:])
        if self.ts.at("DTYPE"):
            self.ts.next()
            dt = self.term(self.ts.next(), position="datatype")
            if not isinstance(dt, Iri):
                raise self.fail(tok, "expected datatype IRI after '^^'")
            return Literal(lexical, dt)
        return Literal(lexical)

    def iriref(self, tok: Token) -> Iri:
        try:
            return Iri(tok.text[1:-1])
        except MalformedIri:
            raise self.fail(tok, "IRI must be absolute")


def parse_query(text: str) -> QueryAst:
    """Raises QuerySyntaxError (with position) or UndeclaredPrefix."""
    return _Parser(text).parse()


# --- Evaluation ---

Solution = dict[Var, Term]

_OPS: dict[str, Callable[[object, object], bool]] = {
    "=": operator.eq,
    "!=": operator.ne,
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
}


def _resolve(slot: Slot, sol: Solution) -> Optional[Term]:
    if isinstance(slot, Var):
        return sol.get(slot)
    return slot


def _numeric(term: Term) -> bool:
    return isinstance(term, Literal) and term.is_numeric and term.well_formed()


def _lexical(term: Term) -> str:
    return term.lexical if isinstance(term, Literal) else str(term)


def compare(left: Term, op: str, right: Term) -> bool:
    """Terms of different kinds are never equal. Otherwise numeric comparison
    when both sides are numeric literals, else lexical."""
    if op in ("=", "!=") and type(left) is not type(right):
        return op == "!="
    if _numeric(left) and _numeric(right):
        return _OPS[op](left.value, right.value)  # type: ignore[union-attr]
    return _OPS[op](_lexical(left), _lexical(right))


def _passes(sol: Solution, filters: list[Comparison]) -> bool:
    for f in filters:
        left, right = _resolve(f.left, sol), _resolve(f.right, sol)
        if left is None or right is None:
            return False
        if not compare(left, f.op, right):
            return False
    return True


def _extend(pat: TriplePattern, sol: Solution, graph: Graph) -> list[Solution]:
    s, p, o = (_resolve(x, sol) for x in pat.slots())
    if isinstance(s, Literal) or (p is not None and not isinstance(p, Iri)):
        return []
    out = []
    for t in graph.match(s, p, o):  # type: ignore[arg-type]
        new = dict(sol)
        ok = True
        for slot, value in zip(pat.slots(), (t.subject, t.predicate, t.object)):
            if not isinstance(slot, Var):
                continue
            bound = new.get(slot)
            if bound is None:
                new[slot] = value
            elif bound != value or type(bound) is not type(value):
                ok = False
                break
        if ok:
            out.append(new)
    return out


def join_order(patterns: list[TriplePattern], graph: Graph) -> list[TriplePattern]:
    """Greedy most-selective-first: most bound positions, then smallest
    constant-only index estimate, then original position."""
    remaining = list(enumerate(patterns))
    bound: set[Var] = set()
    order = []
    while remaining:
        def key(item: tuple[int, TriplePattern]) -> tuple[int, int, int]:
            i, pat = item
            n_bound = sum(1 for x in pat.slots() if not isinstance(x, Var) or x in bound)
            consts = [None if isinstance(x, Var) else x for x in pat.slots()]
            estimate = 0 if isinstance(consts[0], Literal) else graph.count(*consts)  # type: ignore[arg-type]
            return (-n_bound, estimate, i)

        best = min(remaining, key=key)
        remaining.remove(best)
        order.append(best[1])
        bound.update(best[1].variables())
    return order


def execute(q: QueryAst, graph: Graph, patterns: Optional[list[TriplePattern]] = None) -> BindingTable:
    """Evaluate ``q``. ``patterns`` overrides the join order (for testing)."""
    ordered = patterns if patterns is not None else join_order(q.patterns, graph)
    sols: list[Solution] = [{}]
    for pat in ordered:
        sols = [new for sol in sols for new in _extend(pat, sol, graph)]
        if not sols:
            break
    sols = [s for s in sols if _passes(s, q.filters)]

    header = q.header()
    rows = [{var: sol[var] for var in header} for sol in sols]
    rows.sort(key=lambda r: tuple(term_key(r[var]) for var in header))
    if q.distinct:
        unique: list[dict[Var, Term]] = []
        for row in rows:
            if not unique or row != unique[-1]:
                unique.append(row)
        rows = unique
    if q.limit is not None:
        rows = rows[:q.limit]
    return BindingTable(header, rows)
