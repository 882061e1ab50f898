"""Conversion to and from rdflib graphs (RDF/XML, N-Triples, JSON-LD input)."""

from __future__ import annotations

from pathlib import Path

import rdflib
from rdflib.util import guess_format

from eg.errors import EduGraphError
from eg.graph import BNode, Graph, Iri, Literal, MalformedIri, Term, Triple
from eg.turtle import PrefixMap, standard_prefixes
from eg.vocab import RDF_LANGSTRING, XSD_STRING

FOREIGN_SUFFIXES = (".rdf", ".owl", ".xml", ".nt", ".n3", ".jsonld", ".json")


class ForeignFormatError(EduGraphError):
    """rdflib could not read a non-Turtle input file."""


def _to_rdflib_term(term: Term) -> rdflib.term.Node:
    if isinstance(term, Literal):
        if term.lang:
            return rdflib.Literal(term.lexical, lang=term.lang)
        if term.datatype == XSD_STRING:
            return rdflib.Literal(term.lexical)
        return rdflib.Literal(term.lexical, datatype=rdflib.URIRef(term.datatype))
    if isinstance(term, BNode):
        return rdflib.BNode(str(term))
    return rdflib.URIRef(str(term))


def _from_rdflib_term(node: rdflib.term.Node) -> Term:
    if isinstance(node, rdflib.Literal):
        if node.language:
            return Literal(str(node), RDF_LANGSTRING, node.language)
        dt = str(node.datatype) if node.datatype else XSD_STRING
        return Literal(str(node), dt)
    if isinstance(node, rdflib.BNode):
        return BNode(str(node))
    return Iri(str(node))


def to_rdflib(graph: Graph, prefixes: PrefixMap | None = None) -> rdflib.Graph:
    g = rdflib.Graph()
    for label, ns in sorted((prefixes or {}).items()):
        g.bind(label, rdflib.Namespace(ns), override=True)
    for t in graph.triples():
        g.add((
            _to_rdflib_term(t.subject),
            _to_rdflib_term(t.predicate),
            _to_rdflib_term(t.object),
        ))
    return g


def from_rdflib(g: rdflib.Graph) -> tuple[Graph, PrefixMap]:
    """Native graph + prefixes bound in ``g``. Raises MalformedIri on relative IRIs."""
    out = Graph()
    for s, p, o in g:
        out.add(Triple(_from_rdflib_term(s), _from_rdflib_term(p), _from_rdflib_term(o)))
    prefixes = standard_prefixes()
    for label, ns in g.namespaces():
        if label:
            prefixes.setdefault(str(label), str(ns))
    return out, prefixes


def read_foreign(path: Path) -> tuple[Graph, PrefixMap]:
    """Read a non-Turtle RDF file through rdflib."""
    fmt = guess_format(str(path)) or "xml"
    try:
        g = rdflib.Graph().parse(str(path), format=fmt)
        return from_rdflib(g)
    except MalformedIri as e:
        raise ForeignFormatError(f"{path}: {e}") from e
    except Exception as e:  # rdflib raises parser-specific exception types
        raise ForeignFormatError(f"{path}: {type(e).__name__}: {e}") from e
