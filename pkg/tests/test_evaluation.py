"""Tests for eg.evaluation: mapping files and recall."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from eg import vocab as v
from eg.errors import EduGraphError
from eg.evaluation import (
    DuplicateGoldClass,
    EmptySchema,
    MappingEntry,
    MappingSyntaxError,
    SchemaMapping,
    UnknownEducorClass,
    compute_recall,
    evaluate_dir,
    load_mapping,
    parse_mapping,
)

from tests.conftest import MAPPINGS

P = Path("inline.tsv")


class TestParseMapping:
    def test_entries(self):
        m = parse_mapping("# schema: Repo\nCourse\tec:EducationalResource\nRubric\t-\n", P)
        assert m.schema == "Repo"
        assert m.entries == [
            MappingEntry("Course", v.ec("EducationalResource")),
            MappingEntry("Rubric", None),
        ]

    def test_bare_and_full_class_names(self):
        m = parse_mapping(f"A\tSkill\nB\t{v.EC_NS}Test\n", P)
        assert [e.covered_by for e in m.entries] == [v.ec("Skill"), v.ec("Test")]

    def test_schema_defaults_to_stem(self):
        assert parse_mapping("A\t-\n", Path("dir/my_repo.tsv")).schema == "my_repo"

    def test_comments_blank_lines_and_crlf(self):
        m = parse_mapping("# note\r\n\r\nA\tSkill\r\n", P)
        assert len(m.entries) == 1

    @pytest.mark.parametrize("text,line", [
        ("A\n", 1),
        ("A\tSkill\nB\tSkill\textra\n", 2),
        ("A\t \n", 1),
    ])
    def test_syntax_error_line(self, text, line):
        with pytest.raises(MappingSyntaxError) as info:
            parse_mapping(text, P)
        assert info.value.diagnostic.line == line

    def test_duplicate_gold_class(self):
        with pytest.raises(DuplicateGoldClass, match="line 1"):
            parse_mapping("A\tSkill\nA\t-\n", P)

    def test_unknown_class(self):
        with pytest.raises(UnknownEducorClass, match="Spaceship"):
            parse_mapping("A\tec:Spaceship\n", P)

    def test_empty(self):
        with pytest.raises(EmptySchema):
            parse_mapping("# schema: Nothing\n", P)


class TestRecall:
    def test_compute(self):
        m = SchemaMapping("s", [MappingEntry("a", v.ec("Skill")), MappingEntry("b")])
        report = compute_recall(m)
        assert (report.tp, report.fn, report.recall) == (1, 1, 0.5)
        assert report.recall_text == "0.500"

    def test_no_entries(self):
        with pytest.raises(EmptySchema):
            compute_recall(SchemaMapping("s"))

    def test_bundled_mappings(self):
        reports = evaluate_dir(MAPPINGS)
        assert [(r.schema, r.tp, r.fn, r.recall_text) for r in reports] == [
            ("OER Commons", 5, 1, "0.833"),
            ("SkillsCommons", 6, 1, "0.857"),
            ("MERLOT", 7, 1, "0.875"),
        ]

    def test_empty_dir(self, tmp_path):
        with pytest.raises(EmptySchema):
            evaluate_dir(tmp_path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(EduGraphError, match="nope.tsv"):
            load_mapping(tmp_path / "nope.tsv")


# =========================================================================
# Recall over random mappings
# =========================================================================

def _random_mapping(seed: int) -> SchemaMapping:
    rng = random.Random(seed)
    classes = sorted(v.EDUCOR_CLASSES)
    entries = [
        MappingEntry(f"Gold{i}", v.ec(rng.choice(classes)) if rng.random() < 0.6 else None)
        for i in range(rng.randint(1, 15))
    ]
    return SchemaMapping("s", entries)


class TestRecallProperties:
    @pytest.mark.parametrize("seed", range(200))
    def test_order_irrelevant(self, seed):
        m = _random_mapping(seed)
        shuffled = list(m.entries)
        random.Random(-seed).shuffle(shuffled)
        assert compute_recall(SchemaMapping("s", shuffled)) == compute_recall(m)

    @pytest.mark.parametrize("seed", range(200))
    def test_line_order_irrelevant(self, seed):
        m = _random_mapping(seed)
        lines = [f"{e.gold_class}\t{e.covered_by or '-'}" for e in m.entries]
        random.Random(-seed).shuffle(lines)
        assert compute_recall(parse_mapping("\n".join(lines), P)).recall == compute_recall(m).recall

    @pytest.mark.parametrize("seed", range(200))
    def test_covering_never_lowers_recall(self, seed):
        m = _random_mapping(seed)
        before = compute_recall(m)
        for i, e in enumerate(m.entries):
            if e.covered:
                continue
            entries = list(m.entries)
            entries[i] = MappingEntry(e.gold_class, v.ec("Skill"))
            after = compute_recall(SchemaMapping("s", entries))
            assert after.recall > before.recall
            assert (after.tp, after.fn) == (before.tp + 1, before.fn - 1)

    @pytest.mark.parametrize("seed", range(200))
    def test_in_unit_range(self, seed):
        r = compute_recall(_random_mapping(seed))
        assert 0.0 <= r.recall <= 1.0
        assert r.tp + r.fn == len(_random_mapping(seed).entries)
