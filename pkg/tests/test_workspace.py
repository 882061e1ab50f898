"""Tests for eg.workspace: ingest, persistence, profile replacement."""

from __future__ import annotations

import dataclasses
from pathlib import Path

import pytest
import rdflib

from eg.graph import BNode, Iri
from eg.logger import Logger
from eg.model import profile_for_user
from eg.turtle import parse_turtle
from eg.workspace import IngestError, Workspace, WorkspaceMissing, read_graph_file, resolve_log_dir

from tests.conftest import DATA, DEMO, HEADER, demo


@pytest.fixture
def workspace(tmp_path: Path, logger: Logger) -> Workspace:
    return Workspace(tmp_path / "ws.ttl", log=logger)


class TestIngest:
    def test_union_of_inputs(self, workspace):
        count = workspace.ingest([DATA / "educor.ttl", DATA / "demo.ttl"])
        assert count == len(workspace.graph)
        assert workspace.graph.sealed
        assert workspace.prefixes["demo"] == DEMO

    def test_reingest_adds_nothing(self, workspace):
        first = workspace.ingest([DATA / "demo.ttl"])
        assert workspace.ingest([DATA / "demo.ttl"]) == first

    def test_fresh(self, workspace):
        workspace.ingest([DATA / "demo.ttl"])
        small = workspace.ingest([DATA / "two_paths.ttl"], fresh=True)
        workspace.load()
        assert small == len(workspace.graph)
        assert not workspace.graph.instances("https://github.com/tibonto/educor#Test")

    def test_failed_input_writes_nothing(self, workspace, tmp_path):
        bad = tmp_path / "bad.ttl"
        bad.write_text("nope:a nope:b nope:c .", encoding="utf-8")
        with pytest.raises(IngestError, match="bad.ttl:1:1"):
            workspace.ingest([DATA / "demo.ttl", bad])
        assert not workspace.exists

    def test_log_records_ingest(self, workspace, logger):
        workspace.ingest([DATA / "demo.ttl"])
        assert "[INGEST]" in logger.log_path.read_text()

    def test_blank_nodes_scoped_per_file(self, workspace, tmp_path):
        a, b = tmp_path / "a.ttl", tmp_path / "b.ttl"
        a.write_text(HEADER + '_:n ex:name "a" .\n', encoding="utf-8")
        b.write_text(HEADER + '_:n ex:name "b" .\n', encoding="utf-8")
        workspace.ingest([a, b])
        subjects = {t.subject for t in workspace.graph}
        assert len(subjects) == 2
        assert all(isinstance(s, BNode) for s in subjects)

    def test_foreign_input(self, workspace, tmp_path):
        nt = tmp_path / "demo.nt"
        g = rdflib.Graph().parse(str(DATA / "two_paths.ttl"), format="turtle")
        nt.write_text(g.serialize(format="nt"), encoding="utf-8")
        assert workspace.ingest([nt]) == len(g)


class TestReadGraphFile:
    def test_missing(self, tmp_path):
        with pytest.raises(IngestError, match="missing.ttl"):
            read_graph_file(tmp_path / "missing.ttl")

    def test_not_utf8(self, tmp_path):
        path = tmp_path / "latin.ttl"
        path.write_bytes(b'<http://example.org/s> <http://example.org/p> "caf\xe9" .')
        with pytest.raises(IngestError, match="UTF-8"):
            read_graph_file(path)


class TestPersistence:
    def test_load_missing(self, workspace):
        with pytest.raises(WorkspaceMissing):
            workspace.load()

    def test_saved_file_reparses(self, workspace):
        workspace.ingest([DATA / "demo.ttl"])
        graph, prefixes = parse_turtle(workspace.path.read_text(encoding="utf-8"))
        assert graph == workspace.graph
        assert prefixes["demo"] == DEMO

    def test_no_temp_file_left(self, workspace):
        workspace.ingest([DATA / "demo.ttl"])
        assert [p.name for p in workspace.path.parent.glob("*.tmp")] == []

    def test_log_dir_relative_to_workspace(self, tmp_path):
        assert resolve_log_dir(tmp_path / "sub" / "ws.ttl") == (tmp_path / "sub").resolve() / "logs"


class TestReplaceProfile:
    def test_round_trip(self, workspace):
        workspace.ingest([DATA / "demo.ttl"])
        old = workspace.profile("demo:alice")
        new = dataclasses.replace(old, preferences={"audio": 0.65, "text": 0.4, "video": 0.8})
        workspace.replace_profile(old, new)
        workspace.load()
        assert workspace.profile("demo:alice") == new
        assert profile_for_user(workspace.graph, demo("bob")).preferences == {"audio": 0.9}

    def test_removed_children_disappear(self, workspace):
        workspace.ingest([DATA / "demo.ttl"])
        old = workspace.profile("demo:alice")
        workspace.replace_profile(old, dataclasses.replace(old, indicators=[], constructs={}))
        workspace.load()
        assert workspace.graph.match(demo("alice-profile-ind-1"), None, None) == set()
        assert workspace.profile("demo:alice").indicators == []


class TestNames:
    @pytest.mark.parametrize("name", [
        "demo:alice",
        "<https://example.org/edugraph/demo#alice>",
        "https://example.org/edugraph/demo#alice",
        "  demo:alice ",
    ])
    def test_expand(self, workspace, name):
        workspace.ingest([DATA / "demo.ttl"])
        assert workspace.expand(name) == demo("alice")

    def test_unknown_prefix_is_absolute_iri(self, workspace):
        assert workspace.expand("urn:isbn:123") == Iri("urn:isbn:123")

    def test_compact(self, workspace):
        workspace.ingest([DATA / "demo.ttl"])
        assert workspace.compact(demo("bob")) == "demo:bob"
        assert workspace.compact("http://elsewhere.org/x") == "http://elsewhere.org/x"
