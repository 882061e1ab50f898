"""Learning path generation over the prerequisite DAG.

A path's weight depends only on its topic set, so every topological order of
one candidate set shares a weight. ``enumerate_paths`` runs a best-first
search over topological prefixes keyed by (-weight, prefix): prefixes sort
before their extensions, so complete paths come off the heap already ranked
by weight descending, then by topic sequence.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, replace
from typing import Optional

from eg import vocab as v
from eg.app_config import cfg
from eg.errors import EduGraphError
from eg.graph import Graph, Iri
from eg.model import (
    EducationalResource,
    KnowledgeTopic,
    LearningPath,
    Skill,
    UserProfile,
    typed_view,
)
from eg.recommender import recommend
from eg.validate import UnresolvedTopic


class UnknownGoal(EduGraphError):
    pass


class EmptyGoal(EduGraphError):
    """Skill used as a goal requires no topics."""


class CyclicPrerequisites(EduGraphError):
    pass


class NoFeasibleOrder(EduGraphError):
    """Every topological order violates the endpoint rule."""


class InvalidRequirements(EduGraphError):
    pass


@dataclass(frozen=True)
class RecommendationRequirements:
    """Criterion weights for path ranking (normalized) and the path count k."""

    difficulty_fit: float = 0.4
    preference_fit: float = 0.3
    quality: float = 0.2
    path_length: float = 0.1
    max_paths: int = 3

    def __post_init__(self) -> None:
        weights = self.weights()
        if any(w < 0 for w in weights):
            raise InvalidRequirements("requirement weights must be >= 0")
        if abs(math.fsum(weights) - 1.0) > 1e-9:
            raise InvalidRequirements("requirement weights must sum to 1")
        if self.max_paths < 1:
            raise InvalidRequirements("max_paths must be >= 1")

    def weights(self) -> tuple[float, float, float, float]:
        return (self.difficulty_fit, self.preference_fit, self.quality, self.path_length)

    @classmethod
    def from_config(cls, k: Optional[int] = None) -> "RecommendationRequirements":
        r = cfg.requirements
        return cls(
            r.difficulty_fit, r.preference_fit, r.quality, r.path_length,
            r.max_paths if k is None else k,
        )


# --- Topic closure ---


def _closure(seeds: set[Iri], graph: Graph) -> frozenset[Iri]:
    seen: set[Iri] = set()
    todo = sorted(seeds)
    while todo:
        node = todo.pop()
        if node in seen:
            continue
        seen.add(node)
        todo.extend(
            o for o in graph.objects(node, Iri(v.HAS_PREREQUISITE))
            if isinstance(o, Iri) and o not in seen
        )
    return frozenset(seen)


def required_topics(goal: str, graph: Graph) -> frozenset[Iri]:
    """Goal topics closed under the prerequisite relation.

    A Skill goal starts from its required topics, a KnowledgeTopic goal from
    itself. Raises UnknownGoal, EmptyGoal.
    """
    node = Iri(goal)
    types = graph.types(node)
    if Iri(v.SKILL) in types:
        seeds = set(typed_view(graph, node, Skill).required_topics)
        if not seeds:
            raise EmptyGoal(f"skill {goal} requires no knowledge topics")
    elif Iri(v.KNOWLEDGE_TOPIC) in types:
        seeds = {node}
    else:
        raise UnknownGoal(f"unknown goal: {goal}")
    return _closure(seeds, graph)


def candidate_sets(goal: str, graph: Graph) -> list[frozenset[Iri]]:
    """Topic sets a path may cover: the required closure plus any subset of
    the goal skill's supporting topics (each closed again)."""
    required = required_topics(goal, graph)
    node = Iri(goal)
    supporting: list[Iri] = []
    if Iri(v.SKILL) in graph.types(node):
        supporting = [
            s for s in typed_view(graph, node, Skill).supporting_topics if s not in required
        ]
    sets = {
        _closure(set(required) | set(extra), graph)
        for r in range(len(supporting) + 1)
        for extra in itertools.combinations(supporting, r)
    }
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


# --- Weighing ---


def _topic(graph: Graph, iri: Iri) -> KnowledgeTopic:
    try:
        return typed_view(graph, iri, KnowledgeTopic)
    except EduGraphError as e:
        raise UnresolvedTopic(f"unresolved topic {iri}: {e}") from e


def weigh_path(
    path: LearningPath,
    profile: UserProfile,
    req: RecommendationRequirements,
    graph: Graph,
) -> float:
    """Convex combination of difficulty fit, preference fit, quality and length.

    Preference and quality use each topic's best accessible resource; a topic
    without one contributes 0.
    """
    n = len(path.topics)
    if n == 0:
        return 0.0
    n_min = len(required_topics(path.goal, graph))
    neutral = cfg.profile.neutral_preference

    gaps, prefs, quals = [], [], []
    for iri in path.topics:
        topic = _topic(graph, iri)
        gaps.append(min(1.0, abs(topic.difficulty - profile.educational_level) / 4))
        best = recommend(iri, profile, 1, graph)
        if best:
            res = typed_view(graph, best[0].resource, EducationalResource)
            prefs.append(min(1.0, max(0.0, profile.preferences.get(res.media_type, neutral))))
            quals.append(min(1.0, max(0.0, res.quality.score)))
        else:
            prefs.append(0.0)
            quals.append(0.0)

    difficulty_fit = 1.0 - math.fsum(gaps) / n
    preference_fit = math.fsum(prefs) / n
    quality = math.fsum(quals) / n
    length = 1.0 / (1 + max(0, n - n_min))
    return math.fsum((
        req.difficulty_fit * difficulty_fit,
        req.preference_fit * preference_fit,
        req.quality * quality,
        req.path_length * length,
    ))


# --- Enumeration ---


@dataclass
class _Candidate:
    topics: frozenset[Iri]
    weight: float
    prereqs: dict[Iri, frozenset[Iri]]
    domain: dict[Iri, str]
    level: dict[Iri, int]
    domain_size: dict[str, int]


def _check_acyclic(topics: frozenset[Iri], prereqs: dict[Iri, frozenset[Iri]]) -> None:
    """Kahn's algorithm; raises CyclicPrerequisites if it stalls."""
    pending = {t: set(prereqs[t]) for t in topics}
    ready = [t for t, ps in pending.items() if not ps]
    done = 0
    while ready:
        node = ready.pop()
        done += 1
        for t, ps in pending.items():
            if node in ps:
                ps.discard(node)
                if not ps:
                    ready.append(t)
    if done != len(topics):
        stuck = sorted(t for t, ps in pending.items() if ps)
        raise CyclicPrerequisites(f"prerequisite cycle among: {', '.join(stuck)}")


def _extensions(
    cand: _Candidate,
    prefix: tuple[Iri, ...],
    endpoint_rule: bool,
) -> list[Iri]:
    placed = set(prefix)
    out = []
    for t in sorted(cand.topics - placed):
        if not cand.prereqs[t] <= placed:
            continue
        if endpoint_rule:
            dom = cand.domain[t]
            in_dom = [p for p in prefix if cand.domain[p] == dom]
            if in_dom and len(in_dom) + 1 == cand.domain_size[dom]:
                if cand.level[in_dom[0]] > cand.level[t]:
                    continue
        out.append(t)
    return out


def _search(cands: list[_Candidate], k: int, endpoint_rule: bool) -> list[tuple[float, tuple[Iri, ...]]]:
    heap: list[tuple[float, tuple[Iri, ...], int]] = [
        (-c.weight, (), i) for i, c in enumerate(cands)
    ]
    heapq.heapify(heap)
    found: list[tuple[float, tuple[Iri, ...]]] = []
    while heap and len(found) < k:
        neg_w, prefix, i = heapq.heappop(heap)
        cand = cands[i]
        if len(prefix) == len(cand.topics):
            found.append((-neg_w, prefix))
            continue
        for t in _extensions(cand, prefix, endpoint_rule):
            heapq.heappush(heap, (neg_w, prefix + (t,), i))
    return found


def enumerate_paths(
    goal: str,
    profile: UserProfile,
    req: RecommendationRequirements,
    graph: Graph,
    strict: bool = False,
) -> list[LearningPath]:
    """Top-k learning paths for ``goal``, weight descending.

    Every path is a topological order of a candidate topic set and satisfies
    the endpoint rule in each domain. If no such order exists, ``strict``
    raises NoFeasibleOrder; otherwise the rule is dropped and the returned
    paths have ``relaxed=True``.

    Raises UnknownGoal, EmptyGoal, CyclicPrerequisites, UnresolvedTopic.
    """
    goal_iri = Iri(goal)
    cands: list[_Candidate] = []
    for topics in candidate_sets(goal, graph):
        views = {t: _topic(graph, t) for t in topics}
        prereqs = {t: frozenset(p for p in views[t].prerequisites if p in topics) for t in topics}
        _check_acyclic(topics, prereqs)
        domain = {t: views[t].domain for t in topics}
        draft = LearningPath(Iri(f"{goal}-draft"), goal_iri, sorted(topics), 0.0)
        cands.append(_Candidate(
            topics=topics,
            weight=weigh_path(draft, profile, req, graph),
            prereqs=prereqs,
            domain=domain,
            level={t: views[t].difficulty for t in topics},
            domain_size={d: sum(1 for x in domain.values() if x == d) for d in set(domain.values())},
        ))

    found = _search(cands, req.max_paths, endpoint_rule=True)
    relaxed = False
    if not found:
        if strict:
            raise NoFeasibleOrder(f"no order of the topics for {goal} satisfies the endpoint rule")
        found = _search(cands, req.max_paths, endpoint_rule=False)
        relaxed = True

    per_topic = cfg.profile.recommendations_per_topic
    paths = []
    for rank, (_, order) in enumerate(found, 1):
        path = LearningPath(
            id=Iri(f"{goal}-path-{rank}"),
            goal=goal_iri,
            topics=list(order),
            weight=0.0,
            recommendations={
                t: recs for t in order if (recs := recommend(t, profile, per_topic, graph))
            },
            objective=profile.objective,
            relaxed=relaxed,
        )
        paths.append(replace(path, weight=weigh_path(path, profile, req, graph)))
    return paths
