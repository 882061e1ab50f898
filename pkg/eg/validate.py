"""Validate EduCOR instance graphs and learning paths.

Diagnostics are data, not exceptions: ``validate_graph`` returns every
violation it finds, sorted by (severity, subject, code, message).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from eg import vocab as v
from eg.errors import EduGraphError
from eg.graph import BNode, Graph, Iri, Literal, Term, Triple
from eg.i18n import t
from eg.model import KnowledgeTopic, LearningPath, typed_view
from eg.turtle import PrefixMap, render_term

ERROR = "error"
WARNING = "warning"

# code -> severity
CATALOG: dict[str, str] = {
    "E_DOMAIN": ERROR,
    "E_RANGE": ERROR,
    "E_DATATYPE": ERROR,
    "E_MISSING_FIELD": ERROR,
    "E_CARDINALITY": ERROR,
    "E_TEST_EMPTY": ERROR,
    "E_PATH_EMPTY": ERROR,
    "E_PATH_DUPLICATE": ERROR,
    "E_GOAL_NO_TOPICS": ERROR,
    "E_PREREQ_CYCLE": ERROR,
    "E_ORDINAL_RANGE": ERROR,
    "E_UNIT_RANGE": ERROR,
    "E_NEGATIVE": ERROR,
    "E_TIMESTAMP_DUP": ERROR,
    "E_STATIC_DUP": ERROR,
    "E_INDICATOR_TIME": ERROR,
    "E_PATH_LEVEL": ERROR,
    "E_PATH_PREREQ": ERROR,
    "W_PATH_NONMONOTONE": WARNING,
    "W_UNKNOWN_PROPERTY": WARNING,
    "W_UNKNOWN_CLASS": WARNING,
}

_CLOSED_VALUES = {
    v.MEDIA_TYPE: v.MEDIA_TYPES,
    v.INDICATOR_KIND: v.INDICATOR_KINDS,
}

_TIMESTAMP_TYPES = (v.XSD_STRING, v.XSD_DATETIME, v.XSD_INTEGER)


class UnresolvedTopic(EduGraphError):
    """Path topic is not a well-formed KnowledgeTopic node."""


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    code: str
    subject: str
    message: str

    def sort_key(self) -> tuple[int, str, str, str]:
        return (0 if self.severity == ERROR else 1, self.subject, self.code, self.message)

    def to_tsv(self) -> str:
        return f"{self.severity}\t{self.code}\t{self.subject}\t{self.message}"


def _diag(code: str, subject: object, **kw: object) -> Diagnostic:
    return Diagnostic(CATALOG[code], code, str(subject), t(f"diag.{code}", **kw))


def _finish(diags: Iterable[Diagnostic]) -> list[Diagnostic]:
    return sorted(set(diags), key=Diagnostic.sort_key)


_SHOW_PREFIXES = PrefixMap(v.DEFAULT_PREFIXES)


def _show(term: Term) -> str:
    return render_term(term, _SHOW_PREFIXES)


def has_errors(diags: Iterable[Diagnostic]) -> bool:
    return any(d.severity == ERROR for d in diags)


# --- Per-triple schema checks ---


def _check_literal_kind(t_: Triple, kind: str) -> Diagnostic | None:
    o = t_.object
    prop = _show(t_.predicate)
    if not isinstance(o, Literal):
        return _diag("E_DATATYPE", t_.subject, prop=prop, value=_show(o), expected=kind)
    ok = {
        v.STRING: o.datatype in (v.XSD_STRING, v.RDF_LANGSTRING),
        v.INTEGER: o.datatype == v.XSD_INTEGER and o.well_formed(),
        v.NUMBER: o.is_numeric and o.well_formed(),
        v.TIMESTAMP_KIND: o.datatype in _TIMESTAMP_TYPES and o.well_formed(),
    }[kind]
    if not ok:
        return _diag("E_DATATYPE", t_.subject, prop=prop, value=_show(o), expected=kind)
    return None


def _check_value(t_: Triple, check: str) -> Diagnostic | None:
    value = float(t_.object.value)  # type: ignore[union-attr]
    prop = _show(t_.predicate)
    shown = t_.object.lexical  # type: ignore[union-attr]
    if check == v.ORDINAL and not (value == int(value) and 1 <= value <= 5):
        return _diag("E_ORDINAL_RANGE", t_.subject, prop=prop, value=shown)
    if check == v.UNIT and not 0.0 <= value <= 1.0:
        return _diag("E_UNIT_RANGE", t_.subject, prop=prop, value=shown)
    if check == v.NON_NEGATIVE and value < 0:
        return _diag("E_NEGATIVE", t_.subject, prop=prop, value=shown)
    return None


def _check_triple(graph: Graph, t_: Triple) -> list[Diagnostic]:
    out: list[Diagnostic] = []
    pred = str(t_.predicate)

    if pred == v.RDF_TYPE:
        o = t_.object
        if isinstance(o, Iri) and o.startswith(v.EC_NS) and o[len(v.EC_NS):] not in v.EDUCOR_CLASSES:
            out.append(_diag("W_UNKNOWN_CLASS", t_.subject, cls=_show(o)))
        return out

    spec = v.PROPERTY_SCHEMA.get(pred)
    if spec is None:
        if pred.startswith(v.EC_NS):
            out.append(_diag("W_UNKNOWN_PROPERTY", t_.subject, prop=_show(t_.predicate)))
        return out

    types = graph.types(t_.subject)
    if not types.intersection(spec.domain):
        out.append(_diag(
            "E_DOMAIN", t_.subject,
            prop=_show(t_.predicate),
            types=", ".join(_show(Iri(c)) for c in spec.domain),
        ))

    if isinstance(spec.range, tuple):
        o = t_.object
        if not (isinstance(o, Iri) and graph.types(o).intersection(spec.range)):
            out.append(_diag(
                "E_RANGE", t_.subject,
                prop=_show(t_.predicate), value=_show(o),
                expected=", ".join(_show(Iri(c)) for c in spec.range),
            ))
        return out

    if spec.range == v.ANY_IRI:
        if not isinstance(t_.object, Iri):
            out.append(_diag(
                "E_RANGE", t_.subject,
                prop=_show(t_.predicate), value=_show(t_.object), expected="IRI",
            ))
        return out

    bad = _check_literal_kind(t_, spec.range)
    if bad is not None:
        out.append(bad)
        return out
    if spec.values:
        bad = _check_value(t_, spec.values)
        if bad is not None:
            out.append(bad)
    allowed = _CLOSED_VALUES.get(pred)
    if allowed and t_.object.lexical not in allowed:  # type: ignore[union-attr]
        out.append(_diag(
            "E_RANGE", t_.subject,
            prop=_show(t_.predicate), value=_show(t_.object), expected=", ".join(allowed),
        ))
    return out

def _check_cardinality(graph: Graph) -> list[Diagnostic]:
    out = []
    for prop in sorted(v.FUNCTIONAL_PROPERTIES):
        counts: dict = defaultdict(int)
        for t_ in graph.match(None, Iri(prop), None):
            counts[t_.subject] += 1
        for subject, n in counts.items():
            if n > 1:
                out.append(_diag("E_CARDINALITY", subject, prop=_show(Iri(prop))))
    return out


def _valid_objects(graph: Graph, node: Term, prop: str) -> list[Term]:
    """Values of ``prop`` on ``node`` that pass every per-triple check."""
    if not isinstance(node, (Iri, BNode)):
        return []
    return [
        o for o in graph.objects(node, Iri(prop))
        if not _check_triple(graph, Triple(node, Iri(prop), o))
    ]


# --- Required fields ---

# class -> (property, field) pairs; a field counts only with a well-formed value
_REQUIRED: dict[str, tuple[tuple[str, str], ...]] = {
    v.KNOWLEDGE_TOPIC: ((v.DOMAIN, "domain"), (v.DIFFICULTY, "difficulty")),
    v.EDUCATIONAL_RESOURCE: (
        (v.REFERS_TO, "topic"),
        (v.MEDIA_TYPE, "media_type"),
        (v.DURATION, "duration_minutes"),
        (v.DIFFICULTY, "difficulty"),
    ),
    v.EXERCISE: ((v.QUESTION, "question"), (v.ANSWER, "answer"), (v.EXERCISE_TOPIC, "topic")),
    v.TEST_RESULT: (
        (v.TIMESTAMP, "timestamp"),
        (v.FOR_USER, "user"),
        (v.FOR_TEST, "test"),
        (v.SCORE, "score"),
    ),
    v.LEARNING_PREFERENCE: (
        (v.MEDIA_TYPE, "media_type"),
        (v.PREFERENCE_WEIGHT, "preference_weight"),
    ),
    v.ACADEMIC_INDICATOR: ((v.ABOUT_TOPIC, "topic"), (v.MASTERY, "mastery")),
    v.PSYCHOLOGICAL_INDICATOR: (
        (v.INDICATOR_ID, "indicator_id"),
        (v.INDICATOR_KIND, "indicator_kind"),
        (v.INDICATOR_VALUE, "indicator_value"),
    ),
    v.PSYCHOLOGICAL_CONSTRUCT: (
        (v.CONSTRUCT_ID, "construct_id"),
        (v.CONSTRUCT_VALUE, "construct_value"),
    ),
    v.LEARNING_PATH: ((v.HAS_LEARNING_GOAL, "goal"),),
}

_STEP_FIELDS = ((v.POSITION, "position"), (v.RECOMMENDS_TOPIC, "recommends_topic"))
_REC_FIELDS = ((v.RANK, "rank"), (v.RECOMMENDS_RESOURCE, "resource"), (v.SCORE, "score"))


def _linked_from(graph: Graph, node: Term, cls: str) -> bool:
    return any(
        Iri(cls) in graph.types(s) for s in graph.subjects(Iri(v.HAS_RECOMMENDATION), node)
    )


def _has_any(graph: Graph, node: Iri, *props: str) -> bool:
    return any(graph.count(node, Iri(p), None) for p in props)


def _recommendation_fields(graph: Graph, node: Iri) -> tuple[tuple[str, str], ...]:
    """Path steps need a position and topic, ranked entries a rank, resource and score."""
    fields: tuple[tuple[str, str], ...] = ()
    if (
        _has_any(graph, node, v.POSITION, v.RECOMMENDS_TOPIC)
        or _linked_from(graph, node, v.LEARNING_PATH)
    ):
        fields += _STEP_FIELDS
    if (
        _has_any(graph, node, v.RANK, v.RECOMMENDS_RESOURCE, v.SCORE)
        or _linked_from(graph, node, v.RECOMMENDATION)
    ):
        fields += _REC_FIELDS
    return fields


def _missing(node: Iri, cls: str, field: str) -> Diagnostic:
    return _diag("E_MISSING_FIELD", node, cls=_show(Iri(cls)), field=field)


def _check_required(graph: Graph) -> list[Diagnostic]:
    out = []
    for cls, fields in _REQUIRED.items():
        for node in graph.instances(cls):
            if isinstance(node, BNode):
                continue
            for prop, field in fields:
                if not _valid_objects(graph, node, prop):
                    out.append(_missing(node, cls, field))

    for node in graph.instances(v.TEST):
        if isinstance(node, Iri) and not _valid_objects(graph, node, v.HAS_EXERCISE):
            out.append(_diag("E_TEST_EMPTY", node))

    for node in graph.instances(v.USER_PROFILE):
        if isinstance(node, BNode):
            continue
        owners = [
            u for u in graph.subjects(Iri(v.HAS_PROFILE), node)
            if node in _valid_objects(graph, u, v.HAS_PROFILE)
        ]
        if not owners:
            out.append(_missing(node, v.USER_PROFILE, "user"))
        academic = [
            a for a in graph.subjects(Iri(v.STORED_IN), node)
            if Iri(v.ACADEMIC_PARAMETER) in graph.types(a)
            and node in _valid_objects(graph, a, v.STORED_IN)
        ]
        if not any(_valid_objects(graph, a, v.EDUCATIONAL_LEVEL) for a in academic):
            out.append(_missing(node, v.USER_PROFILE, "educational_level"))

    for node in graph.instances(v.RECOMMENDATION):
        if isinstance(node, BNode):
            continue
        for prop, field in _recommendation_fields(graph, node):
            if not _valid_objects(graph, node, prop):
                out.append(_missing(node, v.RECOMMENDATION, field))
    return out


def _check_goals(graph: Graph) -> list[Diagnostic]:
    out = []
    goals = {t_.object for t_ in graph.match(None, Iri(v.HAS_LEARNING_GOAL), None)}
    for goal in goals:
        if not isinstance(goal, Iri) or Iri(v.SKILL) not in graph.types(goal):
            continue
        if not _valid_objects(graph, goal, v.REQUIRES_KNOWLEDGE):
            out.append(_diag("E_GOAL_NO_TOPICS", goal))
    return out


def prerequisite_cycles(graph: Graph) -> list[list[Iri]]:
    """Strongly connected components of the prerequisite relation that form cycles.

    Each component is sorted; components are sorted by their first member.
    """
    edges: dict[Iri, list[Iri]] = defaultdict(list)
    for t_ in graph.match(None, Iri(v.HAS_PREREQUISITE), None):
        if isinstance(t_.subject, Iri) and isinstance(t_.object, Iri):
            edges[t_.subject].append(t_.object)
    nodes = sorted(set(edges) | {o for outs in edges.values() for o in outs})

    # Iterative Tarjan.
    index: dict[Iri, int] = {}
    low: dict[Iri, int] = {}
    on_stack: set[Iri] = set()
    stack: list[Iri] = []
    sccs: list[list[Iri]] = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(sorted(edges.get(root, []))))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(sorted(edges.get(nxt, [])))))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                if len(comp) > 1 or node in edges.get(node, []):
                    sccs.append(sorted(comp))
    return sorted(sccs)


def _check_cycles(graph: Graph) -> list[Diagnostic]:
    return [
        _diag("E_PREREQ_CYCLE", node, topic=_show(node))
        for comp in prerequisite_cycles(graph)
        for node in comp
    ]


def _check_results(graph: Graph) -> list[Diagnostic]:
    out = []
    groups: dict[tuple, list[Iri]] = defaultdict(list)
    for node in graph.instances(v.TEST_RESULT):
        for user in graph.objects(node, Iri(v.FOR_USER)):
            for test in graph.objects(node, Iri(v.FOR_TEST)):
                for stamp in graph.objects(node, Iri(v.TIMESTAMP)):
                    groups[(user, test, stamp)].append(node)  # type: ignore[arg-type]
    for (_, _, stamp), nodes in groups.items():
        for node in sorted(nodes)[1:]:
            out.append(_diag("E_TIMESTAMP_DUP", node, timestamp=_show(stamp)))
    return out


def _kinds(graph: Graph, node: Term) -> set[str]:
    return {
        o.lexical for o in _valid_objects(graph, node, v.INDICATOR_KIND) if isinstance(o, Literal)
    }


def _check_indicators(graph: Graph) -> list[Diagnostic]:
    out = []
    static: dict[tuple, set] = defaultdict(set)
    for node in graph.instances(v.PSYCHOLOGICAL_INDICATOR):
        kinds = _kinds(graph, node)
        if "dynamic" in kinds and not _valid_objects(graph, node, v.OBSERVED_AT):
            out.append(_diag("E_INDICATOR_TIME", node))
        if "static" in kinds:
            for ident in _valid_objects(graph, node, v.INDICATOR_ID):
                for owner in _valid_objects(graph, node, v.STORED_IN):
                    static[(owner, ident)].add(node)
    for (owner, ident), nodes in static.items():
        if len(nodes) > 1:
            out.append(_diag("E_STATIC_DUP", owner, indicator=_show(ident)))
    return out


class _TopicFacts(NamedTuple):
    domain: Optional[str]
    difficulty: Optional[int]
    prerequisites: tuple[Iri, ...]


def _path_topics(graph: Graph, node: Iri) -> list[Iri]:
    """Topics in step order, or the plain topic links when the path has no steps."""
    steps: list[tuple[int, Iri]] = []
    for step in _valid_objects(graph, node, v.HAS_RECOMMENDATION):
        positions = _valid_objects(graph, step, v.POSITION)
        topics = _valid_objects(graph, step, v.RECOMMENDS_TOPIC)
        if positions and topics:
            steps.append((int(positions[0].value), Iri(topics[0])))  # type: ignore[union-attr]
    if steps:
        return [topic for _, topic in sorted(steps)]
    return [Iri(o) for o in _valid_objects(graph, node, v.CONSISTS_OF_KNOWLEDGE)]


def _topic_facts(graph: Graph, topic: Iri) -> _TopicFacts:
    domain = _valid_objects(graph, topic, v.DOMAIN)
    level = _valid_objects(graph, topic, v.DIFFICULTY)
    return _TopicFacts(
        domain=domain[0].lexical if domain else None,  # type: ignore[union-attr]
        difficulty=int(level[0].value) if level else None,  # type: ignore[union-attr]
        prerequisites=tuple(Iri(p) for p in _valid_objects(graph, topic, v.HAS_PREREQUISITE)),
    )


def _check_paths(graph: Graph) -> list[Diagnostic]:
    out = []
    for node in graph.instances(v.LEARNING_PATH):
        if isinstance(node, BNode):
            continue
        topics = _path_topics(graph, node)
        if not topics:
            out.append(_diag("E_PATH_EMPTY", node))
            continue
        seen: set[Iri] = set()
        for topic in topics:
            if topic in seen:
                out.append(_diag("E_PATH_DUPLICATE", node, topic=_show(topic)))
            seen.add(topic)
        facts = {topic: _topic_facts(graph, topic) for topic in seen}
        out += _path_rules(node, topics, facts)
    return out


def validate_graph(graph: Graph) -> list[Diagnostic]:
    """All diagnostics for ``graph``; empty iff every check passes.

    Graph-level checks read only values that pass the per-triple checks, so
    adding a triple that is itself flagged never hides another diagnostic.
    """
    diags: list[Diagnostic] = []
    for t_ in graph.triples():
        diags += _check_triple(graph, t_)
    diags += _check_cardinality(graph)
    diags += _check_required(graph)
    diags += _check_goals(graph)
    diags += _check_cycles(graph)
    diags += _check_results(graph)
    diags += _check_indicators(graph)
    diags += _check_paths(graph)
    return _finish(diags)


# --- Learning path axioms ---


def _path_rules(
    path_id: Iri, topics: list[Iri], facts: dict[Iri, _TopicFacts],
) -> list[Diagnostic]:
    out: list[Diagnostic] = []
    by_domain: dict[str, list[int]] = {}
    for iri in topics:
        f = facts[iri]
        if f.domain is not None and f.difficulty is not None:
            by_domain.setdefault(f.domain, []).append(f.difficulty)
    for domain, levels in by_domain.items():
        if len(levels) < 2:
            continue
        if levels[0] > levels[-1]:
            out.append(_diag(
                "E_PATH_LEVEL", path_id, domain=domain, first=levels[0], last=levels[-1],
            ))
        elif any(a > b for a, b in zip(levels, levels[1:])):
            out.append(_diag(
                "W_PATH_NONMONOTONE", path_id,
                domain=domain, levels=", ".join(str(x) for x in levels),
            ))

    first_at: dict[Iri, int] = {}
    for i, iri in enumerate(topics):
        first_at.setdefault(iri, i)
    for i, iri in enumerate(topics):
        for prereq in facts[iri].prerequisites:
            j = first_at.get(prereq)
            if j is not None and j > i:
                out.append(_diag(
                    "E_PATH_PREREQ", path_id, topic=_show(iri), prereq=_show(prereq),
                ))
    return out


def check_path_axioms(path: LearningPath, graph: Graph) -> list[Diagnostic]:
    """Endpoint rule per domain, monotonicity warning, prerequisite order.

    Raises UnresolvedTopic if a path topic is not a KnowledgeTopic.
    """
    facts: dict[Iri, _TopicFacts] = {}
    for iri in path.topics:
        try:
            topic = typed_view(graph, iri, KnowledgeTopic)
        except EduGraphError as e:
            raise UnresolvedTopic(f"unresolved topic {iri}: {e}") from e
        facts[iri] = _TopicFacts(topic.domain, topic.difficulty, tuple(topic.prerequisites))
    return _finish(_path_rules(path.id, list(path.topics), facts))
