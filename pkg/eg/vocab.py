"""EduCOR vocabulary: namespaces, classes, properties and the property schema."""

from __future__ import annotations

from dataclasses import dataclass

EC_NS = "https://github.com/tibonto/educor#"
DC_NS = "http://purl.org/dcx/lrmi-vocabs/alignmentType/"
RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

# Bound in every parser and serializer unless overridden.
STANDARD_PREFIXES: dict[str, str] = {
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "xsd": XSD_NS,
}

# Prefixes a fresh workspace starts with.
DEFAULT_PREFIXES: dict[str, str] = {
    **STANDARD_PREFIXES,
    "ec": EC_NS,
    "dc": DC_NS,
}


def ec(local: str) -> str:
    return EC_NS + local


RDF_TYPE = RDF_NS + "type"
RDF_LANGSTRING = RDF_NS + "langString"
RDFS_LABEL = RDFS_NS + "label"

XSD_STRING = XSD_NS + "string"
XSD_INTEGER = XSD_NS + "integer"
XSD_DECIMAL = XSD_NS + "decimal"
XSD_DOUBLE = XSD_NS + "double"
XSD_FLOAT = XSD_NS + "float"
XSD_BOOLEAN = XSD_NS + "boolean"
XSD_DATETIME = XSD_NS + "dateTime"

NUMERIC_DATATYPES = frozenset({XSD_INTEGER, XSD_DECIMAL, XSD_DOUBLE, XSD_FLOAT})

# --- Classes (one cluster per ontology pattern) ---

EDUCOR_CLASSES: tuple[str, ...] = (
    # Educational resource pattern
    "EducationalResource",
    "MultimediaData",
    "QualityIndicator",
    "Accessibility",
    # Knowledge topic pattern
    "KnowledgeTopic",
    "Theory",
    "Exercise",
    "Methodology",
    "Domain",
    # Skill pattern
    "Skill",
    "LearningOutcome",
    # Test pattern
    "Test",
    "TestResult",
    # Learning path pattern
    "LearningPath",
    "LearningGoal",
    "LearningObjective",
    # Recommendation pattern
    "Recommendation",
    # User profile pattern
    "User",
    "UserProfile",
    "LearningPreference",
    "AcademicParameter",
    "AcademicIndicator",
    "PsychologicalParameter",
    "PsychologicalConstruct",
    "PsychologicalIndicator",
    "StaticIndicator",
    "DynamicIndicator",
)

KNOWLEDGE_TOPIC = ec("KnowledgeTopic")
EDUCATIONAL_RESOURCE = ec("EducationalResource")
SKILL = ec("Skill")
TEST = ec("Test")
EXERCISE = ec("Exercise")
TEST_RESULT = ec("TestResult")
USER = ec("User")
USER_PROFILE = ec("UserProfile")
LEARNING_PREFERENCE = ec("LearningPreference")
ACADEMIC_PARAMETER = ec("AcademicParameter")
ACADEMIC_INDICATOR = ec("AcademicIndicator")
PSYCHOLOGICAL_INDICATOR = ec("PsychologicalIndicator")
PSYCHOLOGICAL_CONSTRUCT = ec("PsychologicalConstruct")
LEARNING_PATH = ec("LearningPath")
RECOMMENDATION = ec("Recommendation")

# --- Properties ---

DOMAIN = ec("domain")
DIFFICULTY = ec("difficulty")
HAS_PREREQUISITE = ec("hasPrerequisite")
HAS_EDUCATIONAL_RESOURCE = ec("hasEducationalResource")

REFERS_TO = ec("refersTo")
MEDIA_TYPE = ec("mediaType")
DURATION = ec("duration")
QUALITY_SCORE = ec("qualityScore")
RATING_COUNT = ec("ratingCount")
ACCESS_MODE = ec("accessMode")
SOURCE_URL = ec("sourceUrl")
SOURCE = ec("source")

REQUIRES_KNOWLEDGE = ec("requiresKnowledge")
SUPPORTING_KNOWLEDGE = ec("supportingKnowledge")
LINKED_TO_JOB = ec("linkedToJob")

HAS_EXERCISE = ec("hasExercise")
TEST_KNOWLEDGE_TOPIC = ec("testKnowledgeTopic")
QUESTION = ec("question")
ANSWER = ec("answer")
EXERCISE_TOPIC = ec("exerciseTopic")

FOR_USER = ec("forUser")
FOR_TEST = ec("forTest")
SCORE = ec("score")
TIMESTAMP = ec("timestamp")
ATTEMPT = ec("attempt")

HAS_PROFILE = ec("hasProfile")
SOLVES = ec("solves")
STORED_IN = ec("storedIn")
HAS_LEARNING_GOAL = ec("hasLearningGoal")
HAS_LEARNING_OBJECTIVE = ec("hasLearningObjective")
PREFERRED_DURATION = ec("preferredDuration")
EDUCATIONAL_LEVEL = DC_NS + "educationalLevel"
ABOUT_TOPIC = ec("aboutTopic")
MASTERY = ec("mastery")
PREFERENCE_WEIGHT = ec("preferenceWeight")
INDICATOR_ID = ec("indicatorId")
INDICATOR_KIND = ec("indicatorKind")
INDICATOR_VALUE = ec("indicatorValue")
OBSERVED_AT = ec("observedAt")
CONSTRUCT_ID = ec("constructId")
CONSTRUCT_VALUE = ec("constructValue")

CONSISTS_OF_KNOWLEDGE = ec("consistsOfKnowledge")
WEIGHT = ec("weight")
HAS_RECOMMENDATION = ec("hasRecommendation")
POSITION = ec("position")
RECOMMENDS_TOPIC = ec("recommendsTopic")
RECOMMENDS_RESOURCE = ec("recommendsResource")
RANK = ec("rank")
RATIONALE = ec("rationale")

MEDIA_TYPES = ("audio", "interactive", "text", "video")
INDICATOR_KINDS = ("dynamic", "static")


# --- Property schema (validator + docs) ---

# Literal range kinds
STRING = "string"
INTEGER = "integer"
NUMBER = "number"
TIMESTAMP_KIND = "timestamp"
ANY_IRI = "any-iri"

# Value range checks
ORDINAL = "ordinal"        # 1..5
UNIT = "unit"              # [0, 1]
NON_NEGATIVE = "non-negative"


@dataclass(frozen=True)
class PropertySpec:
    """Expected domain classes and range of one property.

    ``range`` is either a tuple of class IRIs or one of the literal kinds
    (STRING, INTEGER, NUMBER, TIMESTAMP_KIND) or ANY_IRI for opaque links.
    """

    domain: tuple[str, ...]
    range: tuple[str, ...] | str
    values: str = ""


def _c(*names: str) -> tuple[str, ...]:
    return tuple(ec(n) for n in names)


PROPERTY_SCHEMA: dict[str, PropertySpec] = {
    DOMAIN: PropertySpec(_c("KnowledgeTopic"), STRING),
    DIFFICULTY: PropertySpec(_c("KnowledgeTopic", "EducationalResource"), INTEGER, ORDINAL),
    HAS_PREREQUISITE: PropertySpec(_c("KnowledgeTopic"), _c("KnowledgeTopic")),
    HAS_EDUCATIONAL_RESOURCE: PropertySpec(_c("KnowledgeTopic"), _c("EducationalResource")),
    REFERS_TO: PropertySpec(_c("EducationalResource"), _c("KnowledgeTopic")),
    MEDIA_TYPE: PropertySpec(_c("EducationalResource", "LearningPreference"), STRING),
    DURATION: PropertySpec(_c("EducationalResource"), INTEGER, NON_NEGATIVE),
    QUALITY_SCORE: PropertySpec(_c("EducationalResource"), NUMBER, UNIT),
    RATING_COUNT: PropertySpec(_c("EducationalResource"), INTEGER, NON_NEGATIVE),
    ACCESS_MODE: PropertySpec(_c("EducationalResource", "UserProfile"), STRING),
    SOURCE_URL: PropertySpec(_c("EducationalResource"), STRING),
    SOURCE: PropertySpec(_c("EducationalResource"), STRING),
    REQUIRES_KNOWLEDGE: PropertySpec(_c("Skill"), _c("KnowledgeTopic")),
    SUPPORTING_KNOWLEDGE: PropertySpec(_c("Skill"), _c("KnowledgeTopic")),
    LINKED_TO_JOB: PropertySpec(_c("Skill"), ANY_IRI),
    HAS_EXERCISE: PropertySpec(_c("Test"), _c("Exercise")),
    TEST_KNOWLEDGE_TOPIC: PropertySpec(_c("Test"), _c("KnowledgeTopic")),
    QUESTION: PropertySpec(_c("Exercise"), STRING),
    ANSWER: PropertySpec(_c("Exercise"), STRING),
    EXERCISE_TOPIC: PropertySpec(_c("Exercise"), _c("KnowledgeTopic")),
    FOR_USER: PropertySpec(_c("TestResult"), _c("User")),
    FOR_TEST: PropertySpec(_c("TestResult"), _c("Test")),
    SCORE: PropertySpec(_c("TestResult", "Recommendation"), NUMBER, UNIT),
    TIMESTAMP: PropertySpec(_c("TestResult"), TIMESTAMP_KIND),
    ATTEMPT: PropertySpec(_c("TestResult"), INTEGER, NON_NEGATIVE),
    HAS_PROFILE: PropertySpec(_c("User"), _c("UserProfile")),
    SOLVES: PropertySpec(_c("User"), _c("Test")),
    STORED_IN: PropertySpec(
        _c(
            "AcademicParameter", "AcademicIndicator", "LearningPreference",
            "PsychologicalIndicator", "PsychologicalConstruct", "TestResult",
        ),
        _c("UserProfile"),
    ),
    HAS_LEARNING_GOAL: PropertySpec(
        _c("UserProfile", "LearningPath"), _c("Skill", "KnowledgeTopic"),
    ),
    HAS_LEARNING_OBJECTIVE: PropertySpec(_c("UserProfile", "LearningPath"), STRING),
    PREFERRED_DURATION: PropertySpec(_c("UserProfile"), INTEGER, NON_NEGATIVE),
    EDUCATIONAL_LEVEL: PropertySpec(_c("AcademicParameter"), INTEGER, ORDINAL),
    ABOUT_TOPIC: PropertySpec(_c("AcademicIndicator"), _c("KnowledgeTopic")),
    MASTERY: PropertySpec(_c("AcademicIndicator"), NUMBER, UNIT),
    PREFERENCE_WEIGHT: PropertySpec(_c("LearningPreference"), NUMBER, UNIT),
    INDICATOR_ID: PropertySpec(_c("PsychologicalIndicator"), STRING),
    INDICATOR_KIND: PropertySpec(_c("PsychologicalIndicator"), STRING),
    INDICATOR_VALUE: PropertySpec(_c("PsychologicalIndicator"), NUMBER),
    OBSERVED_AT: PropertySpec(_c("PsychologicalIndicator"), TIMESTAMP_KIND),
    CONSTRUCT_ID: PropertySpec(_c("PsychologicalConstruct"), STRING),
    CONSTRUCT_VALUE: PropertySpec(_c("PsychologicalConstruct"), NUMBER, UNIT),
    CONSISTS_OF_KNOWLEDGE: PropertySpec(_c("LearningPath"), _c("KnowledgeTopic")),
    WEIGHT: PropertySpec(_c("LearningPath"), NUMBER, UNIT),
    HAS_RECOMMENDATION: PropertySpec(
        _c("LearningPath", "Recommendation"), _c("Recommendation"),
    ),
    POSITION: PropertySpec(_c("Recommendation"), INTEGER, NON_NEGATIVE),
    RECOMMENDS_TOPIC: PropertySpec(_c("Recommendation"), _c("KnowledgeTopic")),
    RECOMMENDS_RESOURCE: PropertySpec(_c("Recommendation"), _c("EducationalResource")),
    RANK: PropertySpec(_c("Recommendation"), INTEGER, NON_NEGATIVE),
    RATIONALE: PropertySpec(_c("Recommendation"), STRING),
}

# At most one value per subject.
FUNCTIONAL_PROPERTIES = frozenset({
    DOMAIN, DIFFICULTY, REFERS_TO, MEDIA_TYPE, DURATION, QUALITY_SCORE, RATING_COUNT,
    SOURCE_URL, SOURCE, QUESTION, ANSWER, EXERCISE_TOPIC, FOR_USER, FOR_TEST, SCORE,
    TIMESTAMP, ATTEMPT, STORED_IN, HAS_LEARNING_OBJECTIVE, PREFERRED_DURATION,
    EDUCATIONAL_LEVEL, ABOUT_TOPIC, MASTERY, PREFERENCE_WEIGHT, INDICATOR_ID,
    INDICATOR_KIND, INDICATOR_VALUE, OBSERVED_AT, CONSTRUCT_ID, CONSTRUCT_VALUE, WEIGHT,
    POSITION, RECOMMENDS_TOPIC, RECOMMENDS_RESOURCE, RANK,
})
