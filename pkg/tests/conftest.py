"""Shared fixtures for edugraph tests."""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

import pytest

from eg.graph import Graph, Iri
from eg.logger import Logger
from eg.turtle import parse_turtle

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
QUERIES = ROOT / "queries"
MAPPINGS = ROOT / "mappings"

DEMO = "https://example.org/edugraph/demo#"
TP = "https://example.org/edugraph/two-paths#"
EX = "http://example.org/"

HEADER = (
    "@prefix ec: <https://github.com/tibonto/educor#> .\n"
    "@prefix dc: <http://purl.org/dcx/lrmi-vocabs/alignmentType/> .\n"
    "@prefix ex: <http://example.org/> .\n"
)


def demo(local: str) -> Iri:
    return Iri(DEMO + local)


def ex(local: str) -> Iri:
    return Iri(EX + local)


def load_fixture(*names: str) -> Graph:
    """Sealed union of files under data/."""
    graph = Graph()
    for name in names:
        parsed, _ = parse_turtle((DATA / name).read_text(encoding="utf-8"))
        graph.update(parsed)
    return graph.seal()


def graph_of(body: str) -> Graph:
    """Parse a Turtle snippet with the ec/dc/ex prefixes declared."""
    graph, _ = parse_turtle(HEADER + body)
    return graph.seal()


@pytest.fixture(autouse=True)
def _pin_locale_and_reset():
    from eg import i18n
    i18n.init("en")
    yield
    from eg.app_config import reset
    reset()
    i18n.reset()


@pytest.fixture
def demo_graph() -> Graph:
    return load_fixture("demo.ttl")


@pytest.fixture
def two_paths_graph() -> Graph:
    return load_fixture("two_paths.ttl")


@pytest.fixture
def logger(tmp_path: Path) -> Iterator[Logger]:
    log = Logger(tmp_path / "test.log")
    yield log
    log.close()
