"""Profile-driven resource scoring and profile maintenance.

Scoring is pure. Profile updates (ratings, grading, constructs) return new
UserProfile values; persisting them is the caller's job (see eg.workspace).
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Mapping, Optional

from eg import vocab as v
from eg.app_config import cfg
from eg.errors import EduGraphError
from eg.graph import Graph, Iri
from eg.model import (
    EducationalResource,
    Recommendation,
    Test,
    TestResult,
    UserProfile,
    typed_view,
)


class UnknownTopic(EduGraphError):
    pass


class UnknownResource(EduGraphError):
    pass


class UnknownIndicator(EduGraphError):
    pass


class InvalidConstruct(EduGraphError):
    """Construct weights not normalized or an indicator range is empty."""


class InvalidRating(EduGraphError):
    pass


class EmptyTest(EduGraphError):
    pass


class UnknownExercise(EduGraphError):
    pass


def _clamp(x: float) -> float:
    return min(1.0, max(0.0, x))


# --- Resource scoring ---


@dataclass(frozen=True)
class ScoringWeights:
    difficulty: float = 0.4
    media: float = 0.3
    quality: float = 0.2
    duration: float = 0.1

    @classmethod
    def from_config(cls) -> "ScoringWeights":
        s = cfg.scoring
        return cls(s.difficulty, s.media, s.quality, s.duration)


def accessible(r: EducationalResource, profile: UserProfile) -> bool:
    """Empty profile access modes mean no restriction."""
    return not profile.access_modes or bool(profile.access_modes & r.accessibility)


def duration_fit(minutes: int, preferred: int) -> float:
    if preferred <= 0:
        return 1.0
    return 1.0 - min(1.0, abs(minutes - preferred) / preferred)


def score_resource(
    r: EducationalResource,
    profile: UserProfile,
    weights: Optional[ScoringWeights] = None,
) -> Recommendation:
    """Weighted match of one resource against a profile.

    Resources the user cannot access score 0 with an ``accessibility`` rationale.
    """
    if not accessible(r, profile):
        return Recommendation(r.id, 0.0, (("accessibility", 0.0),))
    w = weights or ScoringWeights.from_config()
    neutral = cfg.profile.neutral_preference
    contributions = (
        ("difficulty", w.difficulty * _clamp(1.0 - abs(r.difficulty - profile.educational_level) / 4)),
        ("media", w.media * _clamp(profile.preferences.get(r.media_type, neutral))),
        ("quality", w.quality * _clamp(r.quality.score)),
        ("duration", w.duration * duration_fit(r.duration_minutes, profile.preferred_duration)),
    )
    score = _clamp(math.fsum(x for _, x in contributions))
    return Recommendation(r.id, score, contributions)


def topic_resources(topic: str, graph: Graph) -> list[EducationalResource]:
    """Resources that refer to ``topic`` or that the topic links to.

    Raises UnknownTopic. Nodes that do not read as resources are skipped.
    """
    node = Iri(topic)
    if Iri(v.KNOWLEDGE_TOPIC) not in graph.types(node):
        raise UnknownTopic(f"unknown topic: {topic}")
    refs = set(graph.subjects(Iri(v.REFERS_TO), node))
    refs.update(graph.objects(node, Iri(v.HAS_EDUCATIONAL_RESOURCE)))  # type: ignore[arg-type]
    out = []
    for ref in sorted(refs):
        try:
            out.append(typed_view(graph, ref, EducationalResource))
        except EduGraphError:
            continue
    return out


def recommend(
    topic: str,
    profile: UserProfile,
    n: int,
    graph: Graph,
    weights: Optional[ScoringWeights] = None,
) -> list[Recommendation]:
    """Top-n accessible resources for a topic, ties broken by resource IRI."""
    ranked = [
        score_resource(r, profile, weights)
        for r in topic_resources(topic, graph)
        if accessible(r, profile)
    ]
    ranked.sort(key=lambda rec: (-rec.score, rec.resource))
    return ranked[:max(0, n)]


# --- Psychological scoring ---


@dataclass(frozen=True)
class IndicatorSpec:
    """Declared indicator: kind and the range used for min-max normalization."""

    id: str
    kind: str
    min: float = 0.0
    max: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in v.INDICATOR_KINDS:
            raise InvalidConstruct(f"indicator '{self.id}': unknown kind '{self.kind}'")
        if not self.max > self.min:
            raise InvalidConstruct(f"indicator '{self.id}': max must exceed min")

    def normalize(self, value: float) -> float:
        return _clamp((value - self.min) / (self.max - self.min))


@dataclass(frozen=True)
class ConstructComponent:
    indicator: str
    weight: float
    direction: str = "+"


@dataclass(frozen=True)
class ConstructDefinition:
    id: str
    components: tuple[ConstructComponent, ...]

    def __post_init__(self) -> None:
        weights = [c.weight for c in self.components]
        if not weights or any(not 0.0 <= w <= 1.0 for w in weights):
            raise InvalidConstruct(f"construct '{self.id}': weights must be in [0, 1]")
        if abs(math.fsum(weights) - 1.0) > 1e-9:
            raise InvalidConstruct(f"construct '{self.id}': weights must sum to 1")
        for c in self.components:
            if c.direction not in ("+", "-"):
                raise InvalidConstruct(
                    f"construct '{self.id}': direction must be '+' or '-', got '{c.direction}'"
                )


def latest_indicator_values(profile: UserProfile) -> dict[str, float]:
    """Indicator id -> value; dynamic indicators use the latest observation."""
    latest: dict[str, tuple[str, float]] = {}
    for ind in profile.indicators:
        seen = latest.get(ind.id)
        if seen is None or ind.observed_at >= seen[0]:
            latest[ind.id] = (ind.observed_at, ind.value)
    return {k: val for k, (_, val) in latest.items()}


def score_constructs(
    profile: UserProfile,
    defs: list[ConstructDefinition],
    catalog: Mapping[str, IndicatorSpec],
) -> dict[str, float]:
    """Updated constructs map: existing values overlaid with every defined construct.

    Raises UnknownIndicator if a definition references an undeclared indicator.
    """
    values = latest_indicator_values(profile)
    neutral = cfg.profile.neutral_fill
    out = dict(profile.constructs)
    for d in defs:
        parts = []
        for c in d.components:
            spec = catalog.get(c.indicator)
            if spec is None:
                raise UnknownIndicator(
                    f"construct '{d.id}' references undeclared indicator '{c.indicator}'"
                )
            raw = values.get(c.indicator)
            if raw is None:
                parts.append(c.weight * neutral)
                continue
            x = spec.normalize(raw)
            parts.append(c.weight * (x if c.direction == "+" else 1.0 - x))
        out[d.id] = _clamp(math.fsum(parts))
    return out


# --- Preference updates ---


@dataclass(frozen=True)
class RatingEvent:
    user: Iri
    resource: Iri
    rating: float
    timestamp: str = ""

    def __post_init__(self) -> None:
        if not 0.0 <= self.rating <= 1.0:
            raise InvalidRating(f"rating must be in [0, 1], got {self.rating}")


def update_preferences(
    profile: UserProfile,
    e: RatingEvent,
    graph: Graph,
    alpha: Optional[float] = None,
) -> UserProfile:
    """EMA update of the preference weight for the rated resource's media type."""
    try:
        r = typed_view(graph, e.resource, EducationalResource)
    except EduGraphError as exc:
        raise UnknownResource(f"unknown resource: {e.resource}") from exc
    a = cfg.profile.ema_alpha if alpha is None else alpha
    old = profile.preferences.get(r.media_type, cfg.profile.neutral_preference)
    prefs = dict(profile.preferences)
    prefs[r.media_type] = _clamp((1.0 - a) * old + a * e.rating)
    return dataclasses.replace(profile, preferences=prefs)


# --- Grading ---


def normalize_answer(text: str) -> str:
    return " ".join(text.split()).casefold()


def _unique_timestamp(now: str, taken: set[str]) -> str:
    if now not in taken:
        return now
    n = 2
    while f"{now}#{n}" in taken:
        n += 1
    return f"{now}#{n}"


def grade_test(
    test: Test,
    answers: Mapping[str, str],
    profile: UserProfile,
    now: str,
) -> tuple[TestResult, UserProfile]:
    """Exact-match grading; records the result and raises topic mastery.

    Unanswered exercises count as wrong. Raises EmptyTest, UnknownExercise.
    """
    if not test.exercises:
        raise EmptyTest(f"test {test.id} has no exercises")
    by_id = {e.id: e for e in test.exercises}
    unknown = sorted(set(answers) - set(by_id))
    if unknown:
        raise UnknownExercise(f"not in test {test.id}: {', '.join(unknown)}")

    correct = sum(
        1 for ex_id, given in answers.items()
        if normalize_answer(given) == normalize_answer(by_id[Iri(ex_id)].answer)
    )
    score = correct / len(test.exercises)

    prior = [r for r in profile.results if r.test == test.id]
    taken_ids = {r.id for r in profile.results}
    k = len(profile.results) + 1
    while Iri(f"{profile.id}-result-{k}") in taken_ids:
        k += 1
    result = TestResult(
        id=Iri(f"{profile.id}-result-{k}"),
        user=profile.user,
        test=test.id,
        score=score,
        timestamp=_unique_timestamp(now, {r.timestamp for r in prior}),
        attempt=len(prior) + 1,
    )

    mastery = dict(profile.mastery)
    topics = test.topics or sorted({e.topic for e in test.exercises})
    for topic in topics:
        mastery[topic] = max(mastery.get(topic, 0.0), score)

    updated = dataclasses.replace(
        profile,
        mastery=mastery,
        results=[*profile.results, result],
        solves=sorted(set(profile.solves) | {test.id}),
    )
    return result, updated
