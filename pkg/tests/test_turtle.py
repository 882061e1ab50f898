"""Tests for eg.turtle and eg.lexer: parsing, diagnostics, serialization."""

from __future__ import annotations

import random

import pytest
import rdflib
from rdflib.compare import isomorphic

from eg import vocab as v
from eg.graph import BNode, Graph, Iri, Literal, Triple
from eg.interop import to_rdflib
from eg.lexer import tokenize, unescape
from eg.turtle import (
    PrefixMap,
    TurtleSyntaxError,
    UnknownPrefix,
    parse_turtle,
    render_term,
    serialize_turtle,
    standard_prefixes,
)

from tests.conftest import DATA, ex

PFX = "@prefix ex: <http://example.org/> .\n"


def _parse(body: str) -> Graph:
    graph, _ = parse_turtle(PFX + body)
    return graph


def _error(text: str) -> TurtleSyntaxError:
    with pytest.raises(TurtleSyntaxError) as info:
        parse_turtle(text)
    return info.value


# =========================================================================
# Lexer
# =========================================================================

class TestLexer:
    def test_positions(self):
        toks = list(tokenize("ex:a\n  ex:b"))
        assert [(t.kind, t.line, t.col) for t in toks[:2]] == [("PNAME", 1, 1), ("PNAME", 2, 3)]

    def test_eof_points_at_last_token(self):
        toks = list(tokenize("ex:a ex:b"))
        assert toks[-1].kind == "EOF"
        assert (toks[-1].line, toks[-1].col) == (1, 6)

    def test_local_name_does_not_eat_final_dot(self):
        kinds = [t.kind for t in tokenize("ex:a.")]
        assert kinds == ["PNAME", "PUNCT", "EOF"]

    def test_query_variable_before_dot(self):
        toks = list(tokenize("?knowResource."))
        assert (toks[0].kind, toks[0].text) == ("VAR", "?knowResource")
        assert toks[1].text == "."

    @pytest.mark.parametrize("body,expected", [
        (r"a\"b", 'a"b'),
        (r"line\nbreak", "line\nbreak"),
        (r"é", "é"),
        (r"\U0001F600", "\U0001F600"),
    ])
    def test_unescape(self, body, expected):
        assert unescape(body) == expected

    def test_unknown_escape(self):
        with pytest.raises(ValueError):
            unescape(r"\q")

    @pytest.mark.parametrize("body", [
        r"\uD800", r"\uDFFF", r"x\uDC00y", r"\U00110000", r"\UFFFFFFFF",
    ])
    def test_non_scalar_escape(self, body):
        with pytest.raises(ValueError, match="not a Unicode scalar value"):
            unescape(body)

    @pytest.mark.parametrize("body,expected", [
        (r"\uD7FF", "\uD7FF"),
        (r"\uE000", "\uE000"),
        (r"\U0010FFFF", "\U0010FFFF"),
    ])
    def test_scalar_edges(self, body, expected):
        assert unescape(body) == expected


# =========================================================================
# Parser: positive
# =========================================================================

class TestParse:
    def test_statement_with_continuations(self):
        g = _parse("ex:s a ex:C ; ex:p ex:o1, ex:o2 ; .")
        assert len(g) == 3
        assert g.types(ex("s")) == {ex("C")}
        assert g.objects(ex("s"), ex("p")) == [ex("o1"), ex("o2")]

    @pytest.mark.parametrize("token,datatype", [
        ("1", v.XSD_INTEGER),
        ("-7", v.XSD_INTEGER),
        ("1.5", v.XSD_DECIMAL),
        ("1e3", v.XSD_DOUBLE),
        ("true", v.XSD_BOOLEAN),
    ])
    def test_shorthand_literals(self, token, datatype):
        g = _parse(f"ex:s ex:p {token} .")
        (t,) = g.triples()
        assert t.object == Literal(token, datatype)

    def test_lang_and_datatype(self):
        g = _parse('ex:s ex:p "hi"@en, "5"^^<http://www.w3.org/2001/XMLSchema#integer> .')
        objs = g.objects(ex("s"), ex("p"))
        assert Literal("hi", lang="en") in objs
        assert Literal("5", v.XSD_INTEGER) in objs

    def test_sparql_style_prefix(self):
        g, prefixes = parse_turtle("PREFIX ex: <http://example.org/>\nex:s ex:p ex:o .")
        assert prefixes["ex"] == "http://example.org/"
        assert len(g) == 1

    def test_standard_prefixes_predeclared(self):
        g, _ = parse_turtle('<http://example.org/s> rdfs:label "x"^^xsd:string .')
        (t,) = g.triples()
        assert t.predicate == v.RDFS_LABEL

    def test_blank_nodes(self):
        g = _parse("_:b1 ex:p _:b2 .")
        (t,) = g.triples()
        assert t.subject == BNode("b1") and t.object == BNode("b2")

    def test_comments_and_empty(self):
        g, _ = parse_turtle("# nothing here\n")
        assert len(g) == 0

    def test_demo_fixture_parses(self):
        g, prefixes = parse_turtle((DATA / "demo.ttl").read_text(encoding="utf-8"))
        assert len(g) > 200
        assert prefixes["demo"] == "https://example.org/edugraph/demo#"


# =========================================================================
# Parser: diagnostics
# =========================================================================

class TestParseErrors:
    def test_undeclared_prefix(self):
        err = _error("foo:a foo:b foo:c .")
        assert (err.diagnostic.line, err.diagnostic.column) == (1, 1)
        assert "undeclared prefix 'foo:'" in err.diagnostic.message

    def test_missing_final_dot(self):
        err = _error(PFX + "ex:a ex:b ex:c")
        assert (err.diagnostic.line, err.diagnostic.column) == (2, 11)
        assert err.diagnostic.token == "end of input"

    def test_relative_iri(self):
        err = _error("<rel> <http://example.org/p> <http://example.org/o> .")
        assert "absolute" in err.diagnostic.message

    def test_property_list_unsupported(self):
        err = _error(PFX + "ex:s ex:p [ ex:q ex:r ] .")
        assert err.diagnostic.line == 2
        assert "not supported" in err.diagnostic.message

    def test_ill_typed_literal(self):
        err = _error(PFX + 'ex:s ex:p "two"^^xsd:integer .')
        assert "invalid lexical form" in err.diagnostic.message

    def test_literal_subject(self):
        err = _error(PFX + '"s" ex:p ex:o .')
        assert "expected subject" in err.diagnostic.message

    def test_base_unsupported(self):
        err = _error("@base <http://example.org/> .")
        assert "unsupported directive" in err.diagnostic.message

    def test_surrogate_escape(self):
        err = _error(PFX + 'ex:s ex:p "\\uD800" .')
        assert (err.diagnostic.line, err.diagnostic.column) == (2, 11)
        assert "not a Unicode scalar value" in err.diagnostic.message

    def test_message_carries_position(self):
        err = _error(PFX + "ex:s ex:p ex:o ex:extra .")
        assert str(err).startswith("2:16:")


# =========================================================================
# Serializer
# =========================================================================

_PLAIN_OBJECTS = [
    ex("o"),
    BNode("b1"),
    Literal('quote " and \\ backslash'),
    Literal("tab\there\nnewline"),
    Literal("Grüße", lang="de"),
    Literal("12", v.XSD_INTEGER),
    Literal("0.25", v.XSD_DECIMAL),
    Literal("2024-01-01T00:00:00Z", v.XSD_DATETIME),
    Literal("\x01control"),
]

# characters that exercise every escaping branch of the serializer
_ALPHABET = (
    list("abcXYZ 09_-.:#<>@^")
    + ['"', "\\", "\n", "\r", "\t", "\b", "\f"]
    + ["\x00", "\x01", "\x1f", "\x7f", "\x85", "\u2028"]
    + ["é", "Ж", "中", "\U0001F600", "\U00010348", "\U0010FFFD"]
)
_LANGS = ["en", "en-GB", "de", "ru", "zh-Hant-TW"]


def _random_literal(rng: random.Random) -> Literal:
    text = "".join(rng.choice(_ALPHABET) for _ in range(rng.randint(0, 12)))
    roll = rng.random()
    if roll < 0.4:
        return Literal(text, lang=rng.choice(_LANGS))
    if roll < 0.5:
        return Literal(str(rng.randint(-10**6, 10**6)), v.XSD_INTEGER)
    return Literal(text)


def _random_graph(seed: int, size: int = 25, wide: bool = False) -> Graph:
    """``size`` random triples; ``wide`` mixes in generated literals."""
    rng = random.Random(seed)
    subjects = [ex(f"s{i}") for i in range(8)] + [BNode(f"b{i}") for i in range(3)]
    g = Graph()
    for _ in range(size):
        if wide and rng.random() < 0.6:
            obj = _random_literal(rng)
        else:
            obj = rng.choice(_PLAIN_OBJECTS)
        g.add(Triple(rng.choice(subjects), ex(f"p{rng.randrange(5)}"), obj))
    return g


class TestSerialize:
    @pytest.mark.parametrize("seed", range(6))
    def test_reparse_gives_same_graph(self, seed):
        g = _random_graph(seed)
        prefixes = standard_prefixes()
        prefixes["ex"] = "http://example.org/"
        back, _ = parse_turtle(serialize_turtle(g, prefixes))
        assert back == g

    @pytest.mark.parametrize("chunk", range(20))
    def test_reparse_many_graphs(self, chunk):
        prefixes = standard_prefixes()
        prefixes["ex"] = "http://example.org/"
        for seed in range(chunk * 50, chunk * 50 + 50):
            rng = random.Random(-seed)
            g = _random_graph(seed, size=rng.randint(0, 500), wide=True)
            text = serialize_turtle(g, prefixes)
            text.encode("utf-8")
            back, _ = parse_turtle(text)
            assert back == g, seed

    def test_demo_reparse(self, demo_graph):
        _, prefixes = parse_turtle((DATA / "demo.ttl").read_text(encoding="utf-8"))
        back, _ = parse_turtle(serialize_turtle(demo_graph, prefixes))
        assert back == demo_graph

    def test_deterministic_across_insertion_order(self):
        triples = _random_graph(3).triples()
        prefixes = PrefixMap({"ex": "http://example.org/"})
        a = serialize_turtle(Graph(triples), prefixes)
        b = serialize_turtle(Graph(reversed(triples)), prefixes)
        assert a == b

    def test_empty_graph(self):
        assert serialize_turtle(Graph(), PrefixMap()) == ""

    def test_uses_a_for_type(self):
        g = Graph([Triple(ex("s"), Iri(v.RDF_TYPE), ex("C"))])
        out = serialize_turtle(g, PrefixMap({"ex": "http://example.org/"}))
        assert "ex:s a ex:C ." in out


class TestRenderTerm:
    def test_compact_when_possible(self):
        prefixes = PrefixMap({"ex": "http://example.org/"})
        assert render_term(ex("thing"), prefixes) == "ex:thing"
        assert render_term(ex("a/b"), prefixes) == "<http://example.org/a/b>"

    def test_shortest_local_wins(self):
        prefixes = PrefixMap({"a": "http://example.org/", "b": "http://example.org/deep/"})
        assert render_term(ex("deep/x"), prefixes) == "b:x"

    def test_typed_literal(self):
        assert render_term(Literal("1", v.XSD_INTEGER), standard_prefixes()) == '"1"^^xsd:integer'

    def test_expand_unknown(self):
        with pytest.raises(UnknownPrefix):
            PrefixMap().expand("nope:x")


# =========================================================================
# Cross-check against rdflib
# =========================================================================

class TestRdflibAgreement:
    @pytest.mark.parametrize("name", ["demo.ttl", "educor.ttl", "two_paths.ttl"])
    def test_fixture_isomorphic(self, name):
        path = DATA / name
        ours, prefixes = parse_turtle(path.read_text(encoding="utf-8"))
        theirs = rdflib.Graph().parse(str(path), format="turtle")
        assert isomorphic(to_rdflib(ours, prefixes), theirs)

    @pytest.mark.parametrize("seed", range(3))
    def test_rdflib_reads_our_output(self, seed):
        g = _random_graph(seed)
        prefixes = PrefixMap({"ex": "http://example.org/", "xsd": v.XSD_NS})
        text = serialize_turtle(g, prefixes)
        theirs = rdflib.Graph().parse(data=text, format="turtle")
        assert isomorphic(to_rdflib(g), theirs)
