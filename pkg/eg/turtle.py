"""Turtle subset: fail-fast parser and deterministic serializer.

Supported: @prefix / PREFIX, absolute and compact IRIs, ``a``, ``_:label``
blank nodes, single-line strings with escapes, @lang tags, ``^^`` datatypes,
integer/decimal/double/boolean shorthand, ``;`` and ``,`` continuations,
comments. Collections, ``[ ]`` property lists and multi-line strings are not.
"""

from __future__ import annotations

from eg.errors import SyntaxDiagnosticError
from eg.graph import (
    BNode,
    Graph,
    Iri,
    Literal,
    MalformedIri,
    Subject,
    Term,
    Triple,
    term_key,
)
from eg.lexer import LOCAL_RE, PREFIX_RE, Token, TokenStream, diagnostic, unescape
from eg.vocab import (
    RDF_TYPE,
    STANDARD_PREFIXES,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
    XSD_STRING,
)


class TurtleSyntaxError(SyntaxDiagnosticError):
    """First syntax error in a Turtle document."""


class UnknownPrefix(KeyError):
    pass


class PrefixMap(dict):
    """Prefix label -> namespace IRI."""

    def expand(self, pname: str) -> Iri:
        """``label:local`` -> absolute IRI. Raises UnknownPrefix / MalformedIri."""
        label, _, local = pname.partition(":")
        if label not in self:
            raise UnknownPrefix(label)
        return Iri(self[label] + local)

    def compact(self, iri: str) -> str | None:
        """Shortest ``label:local`` form for ``iri``, or None if none fits."""
        best: tuple[int, str, str] | None = None
        for label, ns in self.items():
            if not iri.startswith(ns) or (label and not PREFIX_RE.fullmatch(label)):
                continue
            local = iri[len(ns):]
            if local and not LOCAL_RE.fullmatch(local):
                continue
            candidate = (len(local), label, local)
            if best is None or candidate < best:
                best = candidate
        if best is None:
            return None
        return f"{best[1]}:{best[2]}"

    def copy(self) -> "PrefixMap":
        return PrefixMap(self)


def standard_prefixes() -> PrefixMap:
    return PrefixMap(STANDARD_PREFIXES)


_SHORTHAND = {
    "INTEGER": XSD_INTEGER,
    "DECIMAL": XSD_DECIMAL,
    "DOUBLE": XSD_DOUBLE,
}


class _Parser:
    def __init__(self, text: str, prefixes: PrefixMap) -> None:
        self.ts = TokenStream(text)
        self.prefixes = prefixes
        self.graph = Graph()

    def fail(self, tok: Token, message: str) -> TurtleSyntaxError:
        return TurtleSyntaxError(diagnostic(tok, message))

    def expect(self, kind: str, text: str, what: str) -> Token:
        tok = self.ts.next()
        if tok.kind != kind or tok.text != text:
            raise self.fail(tok, f"expected {what}")
        return tok

    # --- document ---

    def parse(self) -> tuple[Graph, PrefixMap]:
        while not self.ts.at("EOF"):
            tok = self.ts.peek()
            if tok.kind == "LANGTAG" and tok.text == "@prefix":
                self.ts.next()
                self.prefix_decl()
                self.expect("PUNCT", ".", "'.' after @prefix")
            elif tok.kind == "WORD" and tok.text.upper() == "PREFIX":
                self.ts.next()
                self.prefix_decl()
            elif tok.kind == "LANGTAG" or (tok.kind == "WORD" and tok.text.upper() == "BASE"):
                raise self.fail(tok, "unsupported directive")
            else:
                self.triples()
                self.expect("PUNCT", ".", "'.' at end of statement")
        return self.graph, self.prefixes

    def prefix_decl(self) -> None:
        name = self.ts.next()
        if name.kind != "PNAME" or not name.text.endswith(":"):
            raise self.fail(name, "expected prefix label ending in ':'")
        ns = self.ts.next()
        if ns.kind != "IRIREF":
            raise self.fail(ns, "expected <namespace IRI>")
        self.prefixes[name.text[:-1]] = str(self.iriref(ns))

    def triples(self) -> None:
        subject = self.subject()
        while True:
            predicate = self.verb()
            self.object_list(subject, predicate)
            if not self.ts.at("PUNCT", ";"):
                return
            while self.ts.at("PUNCT", ";"):
                self.ts.next()
            if self.ts.at("PUNCT", "."):
                return

    def object_list(self, subject: Subject, predicate: Iri) -> None:
        while True:
            obj = self.object()
            self.graph.add(Triple(subject, predicate, obj))
            if not self.ts.at("PUNCT", ","):
                return
            self.ts.next()

    # --- terms ---

    def unsupported(self, tok: Token) -> None:
        if tok.kind == "PUNCT" and tok.text in "[(":
            raise self.fail(tok, "collections and [ ] property lists are not supported")

    def subject(self) -> Subject:
        tok = self.ts.next()
        self.unsupported(tok)
        if tok.kind == "BNODE":
            return BNode(tok.text[2:])
        if tok.kind in ("IRIREF", "PNAME"):
            return self.iri(tok)
        raise self.fail(tok, "expected subject")

    def verb(self) -> Iri:
        tok = self.ts.next()
        if tok.kind == "WORD" and tok.text == "a":
            return Iri(RDF_TYPE)
        if tok.kind in ("IRIREF", "PNAME"):
            return self.iri(tok)
        raise self.fail(tok, "expected predicate")

    def object(self) -> Term:
        tok = self.ts.next()
        self.unsupported(tok)
        if tok.kind in ("IRIREF", "PNAME"):
            return self.iri(tok)
        if tok.kind == "BNODE":
            return BNode(tok.text[2:])
        if tok.kind == "STRING":
            return self.string_literal(tok)
        if tok.kind in _SHORTHAND:
            return Literal(tok.text, _SHORTHAND[tok.kind])
        if tok.kind == "WORD" and tok.text in ("true", "false"):
            return Literal(tok.text, XSD_BOOLEAN)
        raise self.fail(tok, "expected object")

    def string_literal(self, tok: Token) -> Literal:
        try:
            lexical = unescape(tok.text[1:-1])
        except ValueError as e:
            raise self.fail(tok, str(e))
        if self.ts.at("LANGTAG"):
            return Literal(lexical, lang=self.ts.next().text[1:])
        if self.ts.at("DTYPE"):
            self.ts.next()
            dt_tok = self.ts.next()
            if dt_tok.kind not in ("IRIREF", "PNAME"):
                raise self.fail(dt_tok, "expected datatype IRI after '^^'")
            lit = Literal(lexical, self.iri(dt_tok))
            if not lit.well_formed():
                raise self.fail(tok, f"invalid lexical form for {dt_tok.text}")
            return lit
        return Literal(lexical)

    def iri(self, tok: Token) -> Iri:
        if tok.kind == "IRIREF":
            return self.iriref(tok)
        try:
            return self.prefixes.expand(tok.text)
        except UnknownPrefix:
            raise self.fail(tok, f"undeclared prefix '{tok.text.partition(':')[0]}:'")
        except MalformedIri as e:
            raise self.fail(tok, str(e))

    def iriref(self, tok: Token) -> Iri:
        try:
            return Iri(tok.text[1:-1])
        except MalformedIri:
            raise self.fail(tok, "IRI must be absolute")


def parse_turtle(text: str, prefixes: PrefixMap | None = None) -> tuple[Graph, PrefixMap]:
    """Parse a document. rdf/rdfs/xsd are predeclared.

    Returns an unsealed graph and the prefixes in effect at the end.
    Raises TurtleSyntaxError on the first error.
    """
    start = standard_prefixes()
    if prefixes:
        start.update(prefixes)
    return _Parser(text, start).parse()


# --- Serializer ---

_ESCAPES = {
    "\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r",
    "\t": "\\t", "\b": "\\b", "\f": "\\f",
}


def _quote(s: str) -> str:
    out = []
    for ch in s:
        if ch in _ESCAPES:
            out.append(_ESCAPES[ch])
        elif ord(ch) < 0x20 or ord(ch) == 0x7F:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return '"' + "".join(out) + '"'


def render_term(term: Term, prefixes: PrefixMap) -> str:
    """Turtle text for one term (compact IRI when a prefix fits)."""
    if isinstance(term, Literal):
        text = _quote(term.lexical)
        if term.lang:
            return f"{text}@{term.lang}"
        if term.datatype == XSD_STRING:
            return text
        return f"{text}^^{render_term(Iri(term.datatype), prefixes)}"
    if isinstance(term, BNode):
        return f"_:{term}"
    return prefixes.compact(term) or f"<{term}>"


def serialize_turtle(graph: Graph, prefixes: PrefixMap) -> str:
    """Deterministic Turtle: sorted prefix header, then one block per subject."""
    lines = [f"@prefix {label}: <{ns}> ." for label, ns in sorted(prefixes.items())]
    blocks: list[str] = []
    current: Subject | None = None
    by_pred: dict[Iri, list[Term]] = {}

    def flush() -> None:
        if current is None:
            return
        head = render_term(current, prefixes)
        entries = []
        for pred in sorted(by_pred, key=term_key):
            verb = "a" if pred == RDF_TYPE else render_term(pred, prefixes)
            objs = ", ".join(render_term(o, prefixes) for o in by_pred[pred])
            entries.append(f"{verb} {objs}")
        blocks.append(head + " " + " ;\n    ".join(entries) + " .")

    for t in graph.triples():
        if t.subject != current:
            flush()
            current = t.subject
            by_pred = {}
        by_pred.setdefault(t.predicate, []).append(t.object)
    flush()

    out = "\n".join(lines)
    if blocks:
        out += ("\n\n" if lines else "") + "\n\n".join(blocks)
    return out + "\n" if out else ""
