"""Tests for eg.model typed views and eg.registry."""

from __future__ import annotations

import pytest

from eg import registry, vocab as v
from eg.graph import Graph, Iri
from eg.model import (
    EducationalResource,
    Exercise,
    Indicator,
    InvalidFieldValue,
    KnowledgeTopic,
    LearningPath,
    MissingRequiredField,
    MissingType,
    Recommendation,
    Skill,
    Test,
    TestResult,
    UnknownUser,
    UserProfile,
    entities_of,
    profile_for_user,
    profile_nodes,
    typed_view,
)

from tests.conftest import TP, demo, ex, graph_of


class TestRegistry:
    def test_core_classes_registered(self):
        classes = registry.available_classes()
        for cls in (v.KNOWLEDGE_TOPIC, v.EDUCATIONAL_RESOURCE, v.SKILL, v.TEST,
                    v.TEST_RESULT, v.USER_PROFILE, v.LEARNING_PATH, v.EXERCISE):
            assert cls in classes

    def test_lookup(self):
        assert registry.get_entity(v.SKILL) is Skill

    def test_unknown_class(self):
        with pytest.raises(KeyError, match="No typed view"):
            registry.get_entity(v.ec("Theory"))

    def test_duplicate_registration(self):
        with pytest.raises(ValueError, match="already registered"):
            registry.register(v.SKILL)(type("Other", (), {}))


# =========================================================================
# Views over the demo fixture
# =========================================================================

class TestDemoViews:
    def test_topic(self, demo_graph):
        t = typed_view(demo_graph, demo("Probability"), KnowledgeTopic)
        assert t.domain == "Math"
        assert t.difficulty == 2
        assert t.prerequisites == [demo("Statistics")]
        assert t.label == "Probability"

    def test_topic_by_class_iri(self, demo_graph):
        t = typed_view(demo_graph, demo("Statistics"), v.KNOWLEDGE_TOPIC)
        assert isinstance(t, KnowledgeTopic)
        assert t.resources == [demo("StatsVideo")]

    def test_resource(self, demo_graph):
        r = typed_view(demo_graph, demo("StatsPodcast"), EducationalResource)
        assert r.topic == demo("Statistics")
        assert (r.media_type, r.duration_minutes, r.difficulty) == ("audio", 25, 1)
        assert r.quality.score == pytest.approx(0.6)
        assert r.quality.rating_count == 12
        assert r.accessibility == frozenset({"audio"})
        assert r.source == "SkillsCommons"

    def test_resource_defaults(self, two_paths_graph):
        r = typed_view(two_paths_graph, Iri(TP + "A-text"), EducationalResource)
        assert r.accessibility == frozenset({"text"})
        assert r.quality.rating_count == 0
        assert r.source_url == ""

    def test_skill(self, demo_graph):
        s = typed_view(demo_graph, demo("DataScience"), Skill)
        assert s.required_topics == [demo("MachineLearning")]
        assert s.supporting_topics == [demo("DataVisualization")]
        assert s.job_links == [Iri("https://example.org/jobs/data-scientist")]

    def test_test_with_exercises(self, demo_graph):
        quiz = typed_view(demo_graph, demo("StatsQuiz"), Test)
        assert [e.id for e in quiz.exercises] == [demo("StatsQ1"), demo("StatsQ2")]
        assert quiz.exercises[1].answer == "median"
        assert quiz.topics == [demo("Statistics")]

    def test_entities_of(self, demo_graph):
        topics = entities_of(demo_graph, KnowledgeTopic)
        assert len(topics) == 7
        assert [t.id for t in topics] == sorted(t.id for t in topics)


class TestProfile:
    def test_alice(self, demo_graph):
        p = profile_for_user(demo_graph, demo("alice"))
        assert p.id == demo("alice-profile")
        assert p.educational_level == 2
        assert p.preferences == pytest.approx({"video": 0.8, "text": 0.4})
        assert p.preferred_duration == 20
        assert p.access_modes == frozenset({"text", "video"})
        assert p.goals == [demo("DataScience")]
        assert p.objective == "Work as a junior data scientist"
        assert p.mastery == pytest.approx({demo("Statistics"): 0.5})
        assert p.constructs == pytest.approx({"fatigue": 0.35})
        assert p.solves == [demo("StatsQuiz")]
        assert [r.attempt for r in p.results] == [1]

    def test_indicators(self, demo_graph):
        p = profile_for_user(demo_graph, demo("alice"))
        assert p.indicators == [
            Indicator("answer_latency", "dynamic", 42.0, "2024-03-01T10:05:00Z"),
            Indicator("prior_knowledge", "static", 0.6),
        ]

    def test_unknown_user(self, demo_graph):
        with pytest.raises(UnknownUser):
            profile_for_user(demo_graph, demo("carol"))

    def test_profile_nodes(self, demo_graph):
        nodes = profile_nodes(demo_graph, demo("bob-profile"))
        assert nodes == {
            demo("bob-profile"),
            demo("bob-profile-academic"),
            demo("bob-profile-pref-audio"),
            demo("bob-profile-result-1"),
        }

    def test_missing_level(self):
        g = graph_of("ex:u ec:hasProfile ex:p . ex:p a ec:UserProfile .")
        with pytest.raises(MissingRequiredField) as info:
            typed_view(g, ex("p"), UserProfile)
        assert info.value.field == "educational_level"

    def test_written_triples_read_back(self, demo_graph):
        p = profile_for_user(demo_graph, demo("alice"))
        back = typed_view(Graph(p.triples()), p.id, UserProfile)
        assert back == p


# =========================================================================
# Errors
# =========================================================================

class TestViewErrors:
    def test_missing_type(self, demo_graph):
        with pytest.raises(MissingType):
            typed_view(demo_graph, demo("StatsVideo"), KnowledgeTopic)

    def test_missing_field(self):
        g = graph_of('ex:t a ec:KnowledgeTopic ; ec:domain "Math" .')
        with pytest.raises(MissingRequiredField) as info:
            typed_view(g, ex("t"), KnowledgeTopic)
        assert info.value.field == "difficulty"
        assert info.value.node == ex("t")

    def test_ill_typed_field(self):
        g = graph_of('ex:t a ec:KnowledgeTopic ; ec:domain "Math" ; ec:difficulty "two" .')
        with pytest.raises(InvalidFieldValue):
            typed_view(g, ex("t"), KnowledgeTopic)

    def test_literal_where_iri_expected(self):
        g = graph_of(
            'ex:e a ec:Exercise ; ec:question "q" ; ec:answer "a" ; ec:exerciseTopic "Math" .'
        )
        with pytest.raises(InvalidFieldValue):
            typed_view(g, ex("e"), Exercise)

    def test_test_without_exercises(self):
        g = graph_of("ex:q a ec:Test .")
        with pytest.raises(MissingRequiredField) as info:
            typed_view(g, ex("q"), Test)
        assert info.value.field == "exercises"


# =========================================================================
# Writers
# =========================================================================

class TestWriters:
    def test_topic(self):
        t = KnowledgeTopic(ex("t"), "Math", 3, [ex("b"), ex("a")], label="T")
        assert t.prerequisites == [ex("a"), ex("b")]
        assert typed_view(Graph(t.triples()), t.id, KnowledgeTopic) == t

    def test_test_result(self):
        r = TestResult(ex("r"), ex("u"), ex("q"), 0.75, "2024-01-01T00:00:00Z", 2)
        assert typed_view(Graph(r.triples()), r.id, TestResult) == r

    def test_learning_path_with_recommendations(self):
        path = LearningPath(
            id=ex("path"),
            goal=ex("goal"),
            topics=[ex("t2"), ex("t1")],
            weight=0.5,
            recommendations={
                ex("t2"): [
                    Recommendation(ex("r1"), 0.7, (("quality", 0.2), ("difficulty", 0.4))),
                    Recommendation(ex("r2"), 0.6),
                ],
            },
            objective="learn",
        )
        back = typed_view(Graph(path.triples()), path.id, LearningPath)
        assert back == path
        assert back.topics == [ex("t2"), ex("t1")]
        assert back.n == 2

    def test_path_without_steps_uses_topic_set(self):
        g = graph_of(
            "ex:p a ec:LearningPath ; ec:hasLearningGoal ex:g ;"
            " ec:consistsOfKnowledge ex:b, ex:a ."
        )
        path = typed_view(g, ex("p"), LearningPath)
        assert path.topics == [ex("a"), ex("b")]
        assert path.weight == 0.0

    def test_bad_rationale(self):
        g = graph_of(
            "ex:p a ec:LearningPath ; ec:hasLearningGoal ex:g ; ec:hasRecommendation ex:s .\n"
            "ex:s a ec:Recommendation ; ec:position 1 ; ec:recommendsTopic ex:t ;"
            " ec:hasRecommendation ex:r .\n"
            'ex:r a ec:Recommendation ; ec:rank 1 ; ec:recommendsResource ex:x ;'
            ' ec:score 0.5 ; ec:rationale "no equals sign" .'
        )
        with pytest.raises(InvalidFieldValue):
            typed_view(g, ex("p"), LearningPath)

    def test_recommendation_sorts_rationale(self):
        rec = Recommendation(ex("r"), 0.5, (("quality", 0.1), ("difficulty", 0.2)))
        assert [name for name, _ in rec.rationale] == ["difficulty", "quality"]
