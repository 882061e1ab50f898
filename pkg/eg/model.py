"""Typed entity views over EduCOR instance data.

Each entity is a plain dataclass with:
    Entity.from_graph(graph, node)   read the node's property triples
    entity.triples()                 write the entity back as triples

List-valued fields are kept sorted so that reading back what ``triples()``
wrote yields an equal entity. ``typed_view`` dispatches by class IRI through
``eg.registry``. Views are lenient on value ranges; ``eg.validate`` enforces them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Type, TypeVar, Union

from eg import registry, vocab as v
from eg.errors import EduGraphError
from eg.graph import Graph, Iri, Literal, Term, Triple


class MissingType(EduGraphError):
    """Node has no rdf:type triple for the requested class."""


class MissingRequiredField(EduGraphError):
    def __init__(self, field_name: str, node: str = "") -> None:
        where = f" on {node}" if node else ""
        super().__init__(f"missing required field '{field_name}'{where}")
        self.field = field_name
        self.node = node


class InvalidFieldValue(EduGraphError):
    """Property value has the wrong term kind or an ill-typed literal."""

    def __init__(self, field_name: str, node: str, detail: str) -> None:
        super().__init__(f"invalid value for '{field_name}' on {node}: {detail}")
        self.field = field_name
        self.node = node


class UnknownUser(EduGraphError):
    """User IRI has no ec:hasProfile link."""


# --- Property readers ---


def _first(graph: Graph, node: Iri, prop: str) -> Optional[Term]:
    objs = graph.objects(node, Iri(prop))
    return objs[0] if objs else None


def _required(graph: Graph, node: Iri, prop: str, name: str) -> Term:
    term = _first(graph, node, prop)
    if term is None:
        raise MissingRequiredField(name, node)
    return term


def _as_iri(term: Term, name: str, node: Iri) -> Iri:
    if not isinstance(term, Iri):
        raise InvalidFieldValue(name, node, f"expected IRI, got {term!r}")
    return term


def _as_str(term: Term, name: str, node: Iri) -> str:
    if not isinstance(term, Literal):
        raise InvalidFieldValue(name, node, f"expected literal, got {term!r}")
    return term.lexical


def _as_int(term: Term, name: str, node: Iri) -> int:
    if not (isinstance(term, Literal) and term.datatype == v.XSD_INTEGER and term.well_formed()):
        raise InvalidFieldValue(name, node, f"expected xsd:integer, got {term!r}")
    return int(term.lexical)


def _as_float(term: Term, name: str, node: Iri) -> float:
    if not (isinstance(term, Literal) and term.is_numeric and term.well_formed()):
        raise InvalidFieldValue(name, node, f"expected number, got {term!r}")
    return float(term.value)


def _iris(graph: Graph, node: Iri, prop: str, name: str) -> list[Iri]:
    return sorted(_as_iri(o, name, node) for o in graph.objects(node, Iri(prop)))


def _strs(graph: Graph, node: Iri, prop: str, name: str) -> list[str]:
    return sorted(_as_str(o, name, node) for o in graph.objects(node, Iri(prop)))


def _label(graph: Graph, node: Iri) -> str:
    term = _first(graph, node, v.RDFS_LABEL)
    return term.lexical if isinstance(term, Literal) else ""


def _children(graph: Graph, owner: Iri, cls: str) -> list[Iri]:
    """Nodes of class ``cls`` that are ``ec:storedIn`` the owner."""
    return [
        n for n in graph.subjects(Iri(v.STORED_IN), owner)
        if isinstance(n, Iri) and Iri(cls) in graph.types(n)
    ]


# --- Triple writers ---


def _t(s: str, p: str, o: Union[Term, str, int, float]) -> Triple:
    if isinstance(o, (Iri, Literal)):
        return Triple(Iri(s), Iri(p), o)
    return Triple(Iri(s), Iri(p), Literal.of(o))


def _typed(node: str, cls: str) -> Triple:
    return Triple(Iri(node), Iri(v.RDF_TYPE), Iri(cls))


def _links(node: str, prop: str, targets: Iterable[str]) -> list[Triple]:
    return [Triple(Iri(node), Iri(prop), Iri(x)) for x in targets]


# --- Knowledge topic pattern ---


@registry.register(v.KNOWLEDGE_TOPIC)
@dataclass
class KnowledgeTopic:
    id: Iri
    domain: str
    difficulty: int
    prerequisites: list[Iri] = field(default_factory=list)
    resources: list[Iri] = field(default_factory=list)
    label: str = ""

    def __post_init__(self) -> None:
        self.prerequisites = sorted(Iri(x) for x in self.prerequisites)
        self.resources = sorted(Iri(x) for x in self.resources)

    @classmethod
    def from_graph(cls, graph: Graph, node: Iri) -> "KnowledgeTopic":
        return cls(
            id=node,
            domain=_as_str(_required(graph, node, v.DOMAIN, "domain"), "domain", node),
            difficulty=_as_int(
                _required(graph, node, v.DIFFICULTY, "difficulty"), "difficulty", node,
            ),
            prerequisites=_iris(graph, node, v.HAS_PREREQUISITE, "prerequisites"),
            resources=_iris(graph, node, v.HAS_EDUCATIONAL_RESOURCE, "resources"),
            label=_label(graph, node),
        )

    def triples(self) -> list[Triple]:
        out = [
            _typed(self.id, v.KNOWLEDGE_TOPIC),
            _t(self.id, v.DOMAIN, self.domain),
            _t(self.id, v.DIFFICULTY, int(self.difficulty)),
            *_links(self.id, v.HAS_PREREQUISITE, self.prerequisites),
            *_links(self.id, v.HAS_EDUCATIONAL_RESOURCE, self.resources),
        ]
        if self.label:
            out.append(_t(self.id, v.RDFS_LABEL, self.label))
        return out


# --- Educational resource pattern ---


@dataclass(frozen=True)
class QualityIndicator:
    score: float = 0.5
    rating_count: int = 0


DEFAULT_ACCESSIBILITY = frozenset({"text"})


@registry.register(v.EDUCATIONAL_RESOURCE)
@dataclass
class EducationalResource:
    id: Iri
    topic: Iri
    media_type: str
    duration_minutes: int
    difficulty: int
    quality: QualityIndicator = field(default_factory=QualityIndicator)
    accessibility: frozenset[str] = DEFAULT_ACCESSIBILITY
    source_url: str = ""
    source: str = ""
    label: str = ""

    def __post_init__(self) -> None:
        self.accessibility = frozenset(self.accessibility) or DEFAULT_ACCESSIBILITY

    @classmethod
    def from_graph(cls, graph: Graph, node: Iri) -> "EducationalResource":
        score = _first(graph, node, v.QUALITY_SCORE)
        count = _first(graph, node, v.RATING_COUNT)
        modes = _strs(graph, node, v.ACCESS_MODE, "accessibility")
        url = _first(graph, node, v.SOURCE_URL)
        source = _first(graph, node, v.SOURCE)
        return cls(
            id=node,
            topic=_as_iri(_required(graph, node, v.REFERS_TO, "topic"), "topic", node),
            media_type=_as_str(
                _required(graph, node, v.MEDIA_TYPE, "media_type"), "media_type", node,
            ),
            duration_minutes=_as_int(
                _required(graph, node, v.DURATION, "duration_minutes"),
                "duration_minutes", node,
            ),
            difficulty=_as_int(
                _required(graph, node, v.DIFFICULTY, "difficulty"), "difficulty", node,
            ),
            quality=QualityIndicator(
                score=_as_float(score, "quality", node) if score is not None else 0.5,
                rating_count=_as_int(count, "rating_count", node) if count is not None else 0,
            ),
            accessibility=frozenset(modes) or DEFAULT_ACCESSIBILITY,
            source_url=_as_str(url, "source_url", node) if url is not None else "",
            source=_as_str(source, "source", node) if source is not None else "",
            label=_label(graph, node),
        )

    def triples(self) -> list[Triple]:
        out = [
            _typed(self.id, v.EDUCATIONAL_RESOURCE),
            _t(self.id, v.REFERS_TO, Iri(self.topic)),
            _t(self.id, v.MEDIA_TYPE, self.media_type),
            _t(self.id, v.DURATION, int(self.duration_minutes)),
            _t(self.id, v.DIFFICULTY, int(self.difficulty)),
            _t(self.id, v.QUALITY_SCORE, float(self.quality.score)),
            _t(self.id, v.RATING_COUNT, int(self.quality.rating_count)),
        ]
        out += [_t(self.id, v.ACCESS_MODE, m) for m in sorted(self.accessibility)]
        if self.source_url:
            out.append(_t(self.id, v.SOURCE_URL, self.source_url))
        if self.source:
            out.append(_t(self.id, v.SOURCE, self.source))
        if self.label:
            out.append(_t(self.id, v.RDFS_LABEL, self.label))
        return out


# --- Skill pattern ---


@registry.register(v.SKILL)
@dataclass
class Skill:
    id: Iri
    label: str = ""
    required_topics: list[Iri] = field(default_factory=list)
    supporting_topics: list[Iri] = field(default_factory=list)
    job_links: list[Iri] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.required_topics = sorted(Iri(x) for x in self.required_topics)
        self.supporting_topics = sorted(Iri(x) for x in self.supporting_topics)
        self.job_links = sorted(Iri(x) for x in self.job_links)

    @classmethod
    def from_graph(cls, graph: Graph, node: Iri) -> "Skill":
        return cls(
            id=node,
            label=_label(graph, node),
            required_topics=_iris(graph, node, v.REQUIRES_KNOWLEDGE, "required_topics"),
            supporting_topics=_iris(
                graph, node, v.SUPPORTING_KNOWLEDGE, "supporting_topics",
            ),
            job_links=_iris(graph, node, v.LINKED_TO_JOB, "job_links"),
        )

    def triples(self) -> list[Triple]:
        out = [
            _typed(self.id, v.SKILL),
            *_links(self.id, v.REQUIRES_KNOWLEDGE, self.required_topics),
            *_links(self.id, v.SUPPORTING_KNOWLEDGE, self.supporting_topics),
            *_links(self.id, v.LINKED_TO_JOB, self.job_links),
        ]
        if self.label:
            out.append(_t(self.id, v.RDFS_LABEL, self.label))
        return out


# --- Test pattern ---


@registry.register(v.EXERCISE)
@dataclass
class Exercise:
    id: Iri
    question: str
    answer: str
    topic: Iri

    @classmethod
    def from_graph(cls, graph: Graph, node: Iri) -> "Exercise":
        return cls(
            id=node,
            question=_as_str(_required(graph, node, v.QUESTION, "question"), "question", node),
            answer=_as_str(_required(graph, node, v.ANSWER, "answer"), "answer", node),
            topic=_as_iri(_required(graph, node, v.EXERCISE_TOPIC, "topic"), "topic", node),
        )

    def triples(self) -> list[Triple]:
        return [
            _typed(self.id, v.EXERCISE),
            _t(self.id, v.QUESTION, self.question),
            _t(self.id, v.ANSWER, self.answer),
            _t(self.id, v.EXERCISE_TOPIC, Iri(self.topic)),
        ]


@registry.register(v.TEST)
@dataclass
class Test:
    __test__ = False  # not a pytest class

    id: Iri
    exercises: list[Exercise]
    topics: list[Iri] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.exercises = sorted(self.exercises, key=lambda e: e.id)
        self.topics = sorted(Iri(x) for x in self.topics)

    @classmethod
    def from_graph(cls, graph: Graph, node: Iri) -> "Test":
        refs = _iris(graph, node, v.HAS_EXERCISE, "exercises")
        if not refs:
            raise MissingRequiredField("exercises", node)
        return cls(
            id=node,
            exercises=[typed_view(graph, e, Exercise) for e in refs],
            topics=_iris(graph, node, v.TEST_KNOWLEDGE_TOPIC, "topics"),
        )

    def triples(self) -> list[Triple]:
        out = [_typed(self.id, v.TEST)]
        out += _links(self.id, v.HAS_EXERCISE, [e.id for e in self.exercises])
        out += _links(self.id, v.TEST_KNOWLEDGE_TOPIC, self.topics)
        for e in self.exercises:
            out += e.triples()
        return out


@registry.register(v.TEST_RESULT)
@dataclass
class TestResult:
    __test__ = False

    id: Iri
    user: Iri
    test: Iri
    score: float
    timestamp: str
    attempt: int = 1

    @classmethod
    def from_graph(cls, graph: Graph, node: Iri) -> "TestResult":
        attempt = _first(graph, node, v.ATTEMPT)
        ts = _required(graph, node, v.TIMESTAMP, "timestamp")
        return cls(
            id=node,
            user=_as_iri(_required(graph, node, v.FOR_USER, "user"), "user", node),
            test=_as_iri(_required(graph, node, v.FOR_TEST, "test"), "test", node),
            score=_as_float(_required(graph, node, v.SCORE, "score"), "score", node),
            timestamp=_as_str(ts, "timestamp", node),
            attempt=_as_int(attempt, "attempt", node) if attempt is not None else 1,
        )

    def triples(self) -> list[Triple]:
        return [
            _typed(self.id, v.TEST_RESULT),
            _t(self.id, v.FOR_USER, Iri(self.user)),
            _t(self.id, v.FOR_TEST, Iri(self.test)),
            _t(self.id, v.SCORE, float(self.score)),
            _t(self.id, v.TIMESTAMP, self.timestamp),
            _t(self.id, v.ATTEMPT, int(self.attempt)),
        ]


# --- User profile pattern ---


@dataclass(frozen=True)
class Indicator:
    """Psychological indicator observation. Static ones carry no timestamp."""

    id: str
    kind: str
    value: float
    observed_at: str = ""


@registry.register(v.USER_PROFILE)
@dataclass
class UserProfile:
    id: Iri
    user: Iri
    educational_level: int
    preferences: dict[str, float] = field(default_factory=dict)
    preferred_duration: int = 0
    access_modes: frozenset[str] = frozenset()
    goals: list[Iri] = field(default_factory=list)
    objective: str = ""
    mastery: dict[Iri, float] = field(default_factory=dict)
    indicators: list[Indicator] = field(default_factory=list)
    constructs: dict[str, float] = field(default_factory=dict)
    solves: list[Iri] = field(default_factory=list)
    results: list[TestResult] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.access_modes = frozenset(self.access_modes)
        self.goals = sorted(Iri(x) for x in self.goals)
        self.solves = sorted(Iri(x) for x in self.solves)
        self.indicators = sorted(self.indicators, key=lambda i: (i.id, i.observed_at))
        self.results = sorted(self.results, key=lambda r: r.id)

    def _child(self, suffix: str) -> Iri:
        return Iri(f"{self.id}-{suffix}")

    @classmethod
    def from_graph(cls, graph: Graph, node: Iri) -> "UserProfile":
        owners = graph.subjects(Iri(v.HAS_PROFILE), node)
        if not owners:
            raise MissingRequiredField("user", node)
        academic = _children(graph, node, v.ACADEMIC_PARAMETER)
        level: Optional[int] = None
        for a in academic:
            term = _first(graph, a, v.EDUCATIONAL_LEVEL)
            if term is not None:
                level = _as_int(term, "educational_level", a)
                break
        if level is None:
            raise MissingRequiredField("educational_level", node)

        preferences: dict[str, float] = {}
        for p in _children(graph, node, v.LEARNING_PREFERENCE):
            media = _as_str(_required(graph, p, v.MEDIA_TYPE, "media_type"), "media_type", p)
            weight = _required(graph, p, v.PREFERENCE_WEIGHT, "preference_weight")
            preferences[media] = _as_float(weight, "preference_weight", p)

        mastery: dict[Iri, float] = {}
        for m in _children(graph, node, v.ACADEMIC_INDICATOR):
            topic = _as_iri(_required(graph, m, v.ABOUT_TOPIC, "topic"), "topic", m)
            mastery[topic] = _as_float(_required(graph, m, v.MASTERY, "mastery"), "mastery", m)

        indicators = []
        for i in _children(graph, node, v.PSYCHOLOGICAL_INDICATOR):
            observed = _first(graph, i, v.OBSERVED_AT)
            indicators.append(Indicator(
                id=_as_str(_required(graph, i, v.INDICATOR_ID, "indicator_id"), "indicator_id", i),
                kind=_as_str(
                    _required(graph, i, v.INDICATOR_KIND, "indicator_kind"), "indicator_kind", i,
                ),
                value=_as_float(
                    _required(graph, i, v.INDICATOR_VALUE, "indicator_value"),
                    "indicator_value", i,
                ),
                observed_at=_as_str(observed, "observed_at", i) if observed is not None else "",
            ))

        constructs: dict[str, float] = {}
        for c in _children(graph, node, v.PSYCHOLOGICAL_CONSTRUCT):
            cid = _as_str(_required(graph, c, v.CONSTRUCT_ID, "construct_id"), "construct_id", c)
            constructs[cid] = _as_float(
                _required(graph, c, v.CONSTRUCT_VALUE, "construct_value"), "construct_value", c,
            )

        results = [typed_view(graph, r, TestResult) for r in _children(graph, node, v.TEST_RESULT)]
        user = _as_iri(owners[0], "user", node)
        duration = _first(graph, node, v.PREFERRED_DURATION)
        objective = _first(graph, node, v.HAS_LEARNING_OBJECTIVE)
        return cls(
            id=node,
            user=user,
            educational_level=level,
            preferences=preferences,
            preferred_duration=(
                _as_int(duration, "preferred_duration", node) if duration is not None else 0
            ),
            access_modes=frozenset(_strs(graph, node, v.ACCESS_MODE, "access_modes")),
            goals=_iris(graph, node, v.HAS_LEARNING_GOAL, "goals"),
            objective=_as_str(objective, "objective", node) if objective is not None else "",
            mastery=mastery,
            indicators=indicators,
            constructs=constructs,
            solves=_iris(graph, user, v.SOLVES, "solves"),
            results=results,
        )

    def triples(self) -> list[Triple]:
        pid = self.id
        out = [
            _typed(self.user, v.USER),
            _t(self.user, v.HAS_PROFILE, Iri(pid)),
            *_links(self.user, v.SOLVES, self.solves),
            _typed(pid, v.USER_PROFILE),
            _t(pid, v.PREFERRED_DURATION, int(self.preferred_duration)),
            *_links(pid, v.HAS_LEARNING_GOAL, self.goals),
        ]
        out += [_t(pid, v.ACCESS_MODE, m) for m in sorted(self.access_modes)]
        if self.objective:
            out.append(_t(pid, v.HAS_LEARNING_OBJECTIVE, self.objective))

        acad = self._child("academic")
        out += [
            _typed(acad, v.ACADEMIC_PARAMETER),
            _t(acad, v.STORED_IN, Iri(pid)),
            _t(acad, v.EDUCATIONAL_LEVEL, int(self.educational_level)),
        ]
        for media in sorted(self.preferences):
            node = self._child(f"pref-{media}")
            out += [
                _typed(node, v.LEARNING_PREFERENCE),
                _t(node, v.STORED_IN, Iri(pid)),
                _t(node, v.MEDIA_TYPE, media),
                _t(node, v.PREFERENCE_WEIGHT, float(self.preferences[media])),
            ]
        for i, topic in enumerate(sorted(self.mastery), 1):
            node = self._child(f"mastery-{i}")
            out += [
                _typed(node, v.ACADEMIC_INDICATOR),
                _t(node, v.STORED_IN, Iri(pid)),
                _t(node, v.ABOUT_TOPIC, Iri(topic)),
                _t(node, v.MASTERY, float(self.mastery[topic])),
            ]
        for i, ind in enumerate(self.indicators, 1):
            node = self._child(f"ind-{i}")
            out += [
                _typed(node, v.PSYCHOLOGICAL_INDICATOR),
                _t(node, v.STORED_IN, Iri(pid)),
                _t(node, v.INDICATOR_ID, ind.id),
                _t(node, v.INDICATOR_KIND, ind.kind),
                _t(node, v.INDICATOR_VALUE, float(ind.value)),
            ]
            if ind.observed_at:
                out.append(_t(node, v.OBSERVED_AT, ind.observed_at))
        for i, cid in enumerate(sorted(self.constructs), 1):
            node = self._child(f"construct-{i}")
            out += [
                _typed(node, v.PSYCHOLOGICAL_CONSTRUCT),
                _t(node, v.STORED_IN, Iri(pid)),
                _t(node, v.CONSTRUCT_ID, cid),
                _t(node, v.CONSTRUCT_VALUE, float(self.constructs[cid])),
            ]
        for r in self.results:
            out += r.triples()
            out.append(_t(r.id, v.STORED_IN, Iri(pid)))
        return out


def profile_nodes(graph: Graph, profile: Iri) -> set[Iri]:
    """The profile node plus every node stored in it."""
    nodes = {profile}
    nodes.update(n for n in graph.subjects(Iri(v.STORED_IN), profile) if isinstance(n, Iri))
    return nodes


def profile_for_user(graph: Graph, user: str) -> UserProfile:
    """Typed profile of a user. Raises UnknownUser if the user has none."""
    profiles = graph.objects(Iri(user), Iri(v.HAS_PROFILE))
    if not profiles or not isinstance(profiles[0], Iri):
        raise UnknownUser(f"unknown user: {user}")
    return typed_view(graph, profiles[0], UserProfile)


# --- Learning path + recommendation patterns ---


@dataclass(frozen=True)
class Recommendation:
    resource: Iri
    score: float
    rationale: tuple[tuple[str, float], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rationale", tuple(sorted(self.rationale)))


def _rationale_literal(criterion: str, contribution: float) -> Literal:
    return Literal(f"{criterion}={float(contribution)!r}")


def _parse_rationale(text: str, node: Iri) -> tuple[str, float]:
    criterion, sep, value = text.partition("=")
    try:
        if not sep:
            raise ValueError(text)
        return criterion, float(value)
    except ValueError:
        raise InvalidFieldValue("rationale", node, f"expected 'criterion=value', got {text!r}")


@registry.register(v.LEARNING_PATH)
@dataclass
class LearningPath:
    id: Iri
    goal: Iri
    topics: list[Iri]
    weight: float
    recommendations: dict[Iri, list[Recommendation]] = field(default_factory=dict)
    objective: str = ""
    relaxed: bool = field(default=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.topics)

    @classmethod
    def from_graph(cls, graph: Graph, node: Iri) -> "LearningPath":
        weight = _first(graph, node, v.WEIGHT)
        objective = _first(graph, node, v.HAS_LEARNING_OBJECTIVE)
        steps: list[tuple[int, Iri, Iri]] = []
        for s in _iris(graph, node, v.HAS_RECOMMENDATION, "recommendations"):
            pos = _as_int(_required(graph, s, v.POSITION, "position"), "position", s)
            topic = _as_iri(
                _required(graph, s, v.RECOMMENDS_TOPIC, "recommends_topic"),
                "recommends_topic", s,
            )
            steps.append((pos, topic, s))
        steps.sort()
        if steps:
            topics = [topic for _, topic, _ in steps]
        else:
            topics = _iris(graph, node, v.CONSISTS_OF_KNOWLEDGE, "topics")

        recommendations: dict[Iri, list[Recommendation]] = {}
        for _, topic, step in steps:
            ranked: list[tuple[int, Recommendation]] = []
            for r in _iris(graph, step, v.HAS_RECOMMENDATION, "recommendations"):
                rank = _as_int(_required(graph, r, v.RANK, "rank"), "rank", r)
                ranked.append((rank, Recommendation(
                    resource=_as_iri(
                        _required(graph, r, v.RECOMMENDS_RESOURCE, "resource"), "resource", r,
                    ),
                    score=_as_float(_required(graph, r, v.SCORE, "score"), "score", r),
                    rationale=tuple(
                        _parse_rationale(text, r)
                        for text in _strs(graph, r, v.RATIONALE, "rationale")
                    ),
                )))
            if ranked:
                ranked.sort(key=lambda x: x[0])
                recommendations[topic] = [rec for _, rec in ranked]

        return cls(
            id=node,
            goal=_as_iri(_required(graph, node, v.HAS_LEARNING_GOAL, "goal"), "goal", node),
            topics=topics,
            weight=_as_float(weight, "weight", node) if weight is not None else 0.0,
            recommendations=recommendations,
            objective=_as_str(objective, "objective", node) if objective is not None else "",
        )

    def triples(self) -> list[Triple]:
        pid = self.id
        out = [
            _typed(pid, v.LEARNING_PATH),
            _t(pid, v.HAS_LEARNING_GOAL, Iri(self.goal)),
            _t(pid, v.WEIGHT, float(self.weight)),
            *_links(pid, v.CONSISTS_OF_KNOWLEDGE, self.topics),
        ]
        if self.objective:
            out.append(_t(pid, v.HAS_LEARNING_OBJECTIVE, self.objective))
        for pos, topic in enumerate(self.topics, 1):
            step = f"{pid}-step-{pos}"
            out += [
                _typed(step, v.RECOMMENDATION),
                _t(pid, v.HAS_RECOMMENDATION, Iri(step)),
                _t(step, v.POSITION, pos),
                _t(step, v.RECOMMENDS_TOPIC, Iri(topic)),
            ]
            for rank, rec in enumerate(self.recommendations.get(topic, []), 1):
                node = f"{step}-rec-{rank}"
                out += [
                    _typed(node, v.RECOMMENDATION),
                    _t(step, v.HAS_RECOMMENDATION, Iri(node)),
                    _t(node, v.RECOMMENDS_RESOURCE, Iri(rec.resource)),
                    _t(node, v.SCORE, float(rec.score)),
                    _t(node, v.RANK, rank),
                ]
                out += [
                    Triple(Iri(node), Iri(v.RATIONALE), _rationale_literal(c, x))
                    for c, x in rec.rationale
                ]
        return out


# --- Dispatch ---

E = TypeVar("E")


def typed_view(graph: Graph, node: str, cls: Union[Type[E], str]) -> E:
    """Read ``node`` as an instance of ``cls`` (entity class or class IRI).

    Raises MissingType if the node lacks the rdf:type triple, MissingRequiredField
    or InvalidFieldValue on incomplete / ill-typed data.
    """
    entity = registry.get_entity(cls) if isinstance(cls, str) else cls
    iri = Iri(node)
    if Iri(entity.CLASS_IRI) not in graph.types(iri):
        raise MissingType(f"{node} is not typed as {entity.CLASS_IRI}")
    return entity.from_graph(graph, iri)


def entities_of(graph: Graph, cls: Type[E]) -> list[E]:
    """Typed views of every instance of ``cls``, in IRI order."""
    return [
        typed_view(graph, n, cls)
        for n in graph.instances(cls.CLASS_IRI)  # type: ignore[attr-defined]
        if isinstance(n, Iri)
    ]
