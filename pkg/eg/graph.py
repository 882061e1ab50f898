"""RDF terms and the set-semantics triple store with pattern indexes."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from eg.errors import EduGraphError
from eg.vocab import (
    NUMERIC_DATATYPES,
    RDF_LANGSTRING,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_FLOAT,
    XSD_INTEGER,
    XSD_STRING,
)


class MalformedIri(EduGraphError, ValueError):
    """Empty, relative or whitespace-containing IRI."""


class GraphSealed(EduGraphError):
    """Write attempted on a sealed graph."""


_IRI_RE = re.compile(r"[A-Za-z][A-Za-z0-9+.\-]*:[^\s<>\"{}|^`\\]*")
_BNODE_RE = re.compile(r"[A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?")

INTEGER_LEX = re.compile(r"[+-]?\d+")
DECIMAL_LEX = re.compile(r"[+-]?(?:\d+\.\d*|\.\d+|\d+)")
DOUBLE_LEX = re.compile(
    r"[+-]?(?:\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+(?:[eE][+-]?\d+)?)"
    r"|[+-]?INF|NaN"
)
BOOLEAN_LEX = re.compile(r"true|false|1|0")

_LEXICAL_FORMS = {
    XSD_INTEGER: INTEGER_LEX,
    XSD_DECIMAL: DECIMAL_LEX,
    XSD_DOUBLE: DOUBLE_LEX,
    XSD_FLOAT: DOUBLE_LEX,
    XSD_BOOLEAN: BOOLEAN_LEX,
}


class Iri(str):
    """Absolute IRI. Opaque: no normalization beyond prefix expansion."""

    __slots__ = ()

    def __new__(cls, value: str) -> "Iri":
        if isinstance(value, Iri):
            return value
        if not isinstance(value, str) or not _IRI_RE.fullmatch(value):
            raise MalformedIri(f"malformed IRI: {value!r}")
        return super().__new__(cls, value)

    def __repr__(self) -> str:
        return f"Iri({str.__repr__(self)})"


class BNode(str):
    """File-local blank node label (without the ``_:`` prefix)."""

    __slots__ = ()

    def __new__(cls, label: str) -> "BNode":
        if isinstance(label, BNode):
            return label
        if not isinstance(label, str) or not _BNODE_RE.fullmatch(label):
            raise MalformedIri(f"malformed blank node label: {label!r}")
        return super().__new__(cls, label)

    def __repr__(self) -> str:
        return f"BNode({str.__repr__(self)})"


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    datatype: str = XSD_STRING
    lang: str = ""

    def __post_init__(self) -> None:
        if self.lang:
            object.__setattr__(self, "datatype", Iri(RDF_LANGSTRING))
        else:
            object.__setattr__(self, "datatype", Iri(self.datatype))

    @classmethod
    def of(cls, value: Union[str, int, float, bool]) -> "Literal":
        """Typed literal from a Python value (floats use xsd:double, exact repr)."""
        if isinstance(value, bool):
            return cls("true" if value else "false", XSD_BOOLEAN)
        if isinstance(value, int):
            return cls(str(value), XSD_INTEGER)
        if isinstance(value, float):
            return cls(repr(value), XSD_DOUBLE)
        return cls(str(value))

    @property
    def is_numeric(self) -> bool:
        return self.datatype in NUMERIC_DATATYPES

    def well_formed(self) -> bool:
        pattern = _LEXICAL_FORMS.get(self.datatype)
        return pattern is None or bool(pattern.fullmatch(self.lexical))

    @property
    def value(self) -> Union[str, int, float, bool]:
        """Python value. Raises ValueError on an ill-typed lexical form."""
        if not self.well_formed():
            raise ValueError(f"invalid lexical form {self.lexical!r} for {self.datatype}")
        if self.datatype == XSD_INTEGER:
            return int(self.lexical)
        if self.datatype in (XSD_DECIMAL, XSD_DOUBLE, XSD_FLOAT):
            return float(self.lexical)
        if self.datatype == XSD_BOOLEAN:
            return self.lexical in ("true", "1")
        return self.lexical


Subject = Union[Iri, BNode]
Term = Union[Iri, BNode, Literal]


def term_key(term: Term) -> tuple[int, str, str, str]:
    """Total order over terms: IRIs, then blank nodes, then literals."""
    if isinstance(term, Literal):
        return (2, term.lexical, term.datatype, term.lang)
    if isinstance(term, BNode):
        return (1, str(term), "", "")
    return (0, str(term), "", "")


def _as_node(value: object) -> Subject:
    if isinstance(value, (Iri, BNode)):
        return value
    if isinstance(value, str):
        return Iri(value)
    raise MalformedIri(f"expected IRI, got {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Subject
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        object.__setattr__(self, "subject", _as_node(self.subject))
        if isinstance(self.predicate, BNode):
            raise MalformedIri("predicate must be an IRI")
        object.__setattr__(self, "predicate", Iri(self.predicate))
        if not isinstance(self.object, Literal):
            object.__setattr__(self, "object", _as_node(self.object))

    def sort_key(self) -> tuple:
        return (term_key(self.subject), term_key(self.predicate), term_key(self.object))


class Graph:
    """Set of triples with (S), (P), (O), (S,P), (P,O) indexes.

    Single writer until ``seal()``; a sealed graph is an immutable snapshot.
    """

    def __init__(self, triples: Iterable[Triple] = ()) -> None:
        self._triples: set[Triple] = set()
        self._by_s: dict[Subject, set[Triple]] = {}
        self._by_p: dict[Iri, set[Triple]] = {}
        self._by_o: dict[Term, set[Triple]] = {}
        self._by_sp: dict[tuple[Subject, Iri], set[Triple]] = {}
        self._by_po: dict[tuple[Iri, Term], set[Triple]] = {}
        self._sealed = False
        for t in triples:
            self.add(t)

    # --- writes ---

    def add(self, t: Triple) -> bool:
        """Insert a triple. Returns True if the graph grew."""
        if self._sealed:
            raise GraphSealed("graph is sealed")
        if not isinstance(t, Triple):
            raise TypeError(f"expected Triple, got {type(t).__name__}")
        if t in self._triples:
            return False
        self._triples.add(t)
        self._by_s.setdefault(t.subject, set()).add(t)
        self._by_p.setdefault(t.predicate, set()).add(t)
        self._by_o.setdefault(t.object, set()).add(t)
        self._by_sp.setdefault((t.subject, t.predicate), set()).add(t)
        self._by_po.setdefault((t.predicate, t.object), set()).add(t)
        return True

    def update(self, triples: Iterable[Triple]) -> int:
        """Insert many triples. Returns how many were new."""
        return sum(1 for t in triples if self.add(t))

    def remove(self, t: Triple) -> None:
        if self._sealed:
            raise GraphSealed("graph is sealed")
        if t not in self._triples:
            return
        self._triples.discard(t)
        for index, key in (
            (self._by_s, t.subject),
            (self._by_p, t.predicate),
            (self._by_o, t.object),
            (self._by_sp, (t.subject, t.predicate)),
            (self._by_po, (t.predicate, t.object)),
        ):
            bucket = index[key]
            bucket.discard(t)
            if not bucket:
                del index[key]

    def seal(self) -> "Graph":
        self._sealed = True
        return self

    @property
    def sealed(self) -> bool:
        return self._sealed

    def copy(self) -> "Graph":
        """Unsealed copy."""
        return Graph(self._triples)

    # --- reads ---

    def __len__(self) -> int:
        return len(self._triples)

    def __contains__(self, t: object) -> bool:
        return t in self._triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __repr__(self) -> str:
        state = "sealed" if self._sealed else "open"
        return f"<Graph {len(self)} triples, {state}>"

    def triples(self) -> list[Triple]:
        """All triples in deterministic (subject, predicate, object) order."""
        return sorted(self._triples, key=Triple.sort_key)

    def _candidates(
        self,
        s: Optional[Subject],
        p: Optional[Iri],
        o: Optional[Term],
    ) -> tuple[Iterable[Triple], bool]:
        """Smallest index bucket for the bound positions + whether it is exact."""
        empty: set[Triple] = set()
        if s is not None and p is not None:
            return self._by_sp.get((s, p), empty), o is None
        if p is not None and o is not None:
            return self._by_po.get((p, o), empty), True
        if s is not None:
            return self._by_s.get(s, empty), o is None
        if p is not None:
            return self._by_p.get(p, empty), True
        if o is not None:
            return self._by_o.get(o, empty), True
        return self._triples, True

    def match(
        self,
        s: Optional[Subject] = None,
        p: Optional[Iri] = None,
        o: Optional[Term] = None,
    ) -> set[Triple]:
        """Triples matching every bound position (None is a wildcard)."""
        if s is not None and p is not None and o is not None:
            t = Triple(s, p, o) if not isinstance(s, Literal) else None
            return {t} if t is not None and t in self._triples else set()
        bucket, exact = self._candidates(s, p, o)
        if exact:
            return set(bucket)
        return {t for t in bucket if t.object == o}

    def count(
        self,
        s: Optional[Subject] = None,
        p: Optional[Iri] = None,
        o: Optional[Term] = None,
    ) -> int:
        """Size of ``match(s, p, o)`` (index-backed when possible)."""
        if s is not None and p is not None and o is not None:
            return len(self.match(s, p, o))
        bucket, exact = self._candidates(s, p, o)
        if exact:
            return len(bucket)  # type: ignore[arg-type]
        return sum(1 for t in bucket if t.object == o)

    # --- convenience ---

    def objects(self, s: Subject, p: Iri) -> list[Term]:
        return sorted((t.object for t in self._by_sp.get((s, p), ())), key=term_key)

    def subjects(self, p: Iri, o: Term) -> list[Subject]:
        return sorted((t.subject for t in self._by_po.get((p, o), ())), key=term_key)

    def types(self, s: Subject) -> set[Iri]:
        from eg.vocab import RDF_TYPE

        return {
            t.object for t in self._by_sp.get((s, Iri(RDF_TYPE)), ())
            if isinstance(t.object, Iri)
        }

    def instances(self, cls: str) -> list[Subject]:
        from eg.vocab import RDF_TYPE

        return self.subjects(Iri(RDF_TYPE), Iri(cls))


def insert_triple(graph: Graph, t: Triple) -> Graph:
    graph.add(t)
    return graph


def match(
    graph: Graph,
    pattern: tuple[Optional[Subject], Optional[Iri], Optional[Term]],
) -> set[Triple]:
    return graph.match(*pattern)
